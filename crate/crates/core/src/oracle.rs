//! Slow, literal implementations used to cross-check the fast paths. None
//! of these share code with the routines they check.

use std::collections::HashSet;

use itertools::Itertools;

use crate::algebra::{ContactRelation, ContactStructure, FiniteJoinSemilattice};
use crate::enumeration::EnumerationError;

/// Largest carrier for [`semilattice_table_counts`].
pub const TABLE_ORACLE_MAX: usize = 4;
/// Largest carrier for [`weak_contacts_brute`].
pub const MATRIX_ORACLE_MAX: usize = 6;

fn table_ok(k: usize, t: &[usize]) -> bool {
    let op = |x: usize, y: usize| t[x * k + y];
    for x in 0..k {
        if op(x, x) != x {
            return false;
        }
        for y in 0..k {
            if op(x, y) != op(y, x) {
                return false;
            }
            for z in 0..k {
                if op(op(x, y), z) != op(x, op(y, z)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Number of semilattices with 0 of each size `1..=max_size`, found by
/// trying every operation table with 0 as identity and counting the
/// tables distinct up to relabelling the other elements.
pub fn semilattice_table_counts(max_size: usize) -> Result<Vec<usize>, EnumerationError> {
    if max_size > TABLE_ORACLE_MAX {
        return Err(EnumerationError::CapExceeded {
            requested: max_size,
            cap: TABLE_ORACLE_MAX,
        });
    }
    let mut counts = Vec::new();
    for k in 1..=max_size {
        let free: Vec<(usize, usize)> = (1..k).cartesian_product(1..k).collect();
        let mut classes = HashSet::new();
        let total = k.pow(free.len() as u32);
        for code in 0..total {
            let mut t = vec![0; k * k];
            for x in 0..k {
                t[x] = x;
                t[x * k] = x;
            }
            let mut c = code;
            for &(x, y) in &free {
                t[x * k + y] = c % k;
                c /= k;
            }
            if !table_ok(k, &t) {
                continue;
            }
            let canonical = (1..k)
                .permutations(k - 1)
                .map(|rest| {
                    let p: Vec<usize> = std::iter::once(0).chain(rest).collect();
                    let mut u = vec![0; k * k];
                    for x in 0..k {
                        for y in 0..k {
                            u[p[x] * k + p[y]] = p[t[x * k + y]];
                        }
                    }
                    u
                })
                .min()
                .unwrap_or_default();
            classes.insert(canonical);
        }
        counts.push(classes.len());
    }
    Ok(counts)
}

fn literal_weak_contact(s: &FiniteJoinSemilattice, m: &[Vec<bool>]) -> bool {
    let n = s.len();
    if (0..n).any(|x| m[0][x] || m[x][0]) {
        return false;
    }
    if (1..n).any(|x| !m[x][x]) {
        return false;
    }
    for a in 0..n {
        for b in 0..n {
            if m[a][b] != m[b][a] {
                return false;
            }
            if !m[a][b] {
                continue;
            }
            for (a1, row) in m.iter().enumerate() {
                for (b1, &related) in row.iter().enumerate() {
                    if s.leq(a, a1) && s.leq(b, b1) && !related {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every symmetric 0/1 matrix on the carrier that passes a literal check
/// of the weak contact axioms, in increasing matrix code order.
pub fn weak_contacts_brute(s: &FiniteJoinSemilattice) -> Result<Vec<ContactRelation>, EnumerationError> {
    let n = s.len();
    if n > MATRIX_ORACLE_MAX {
        return Err(EnumerationError::CapExceeded {
            requested: n,
            cap: MATRIX_ORACLE_MAX,
        });
    }
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for code in 0u64..(1 << cells.len()) {
        let mut m = vec![vec![false; n]; n];
        for (bit, &(i, j)) in cells.iter().enumerate() {
            let v = code >> bit & 1 == 1;
            m[i][j] = v;
            m[j][i] = v;
        }
        if literal_weak_contact(s, &m) {
            let mut rel = ContactRelation::empty(n);
            for &(i, j) in &cells {
                if m[i][j] {
                    rel.relate(i, j);
                }
            }
            out.push(rel);
        }
    }
    Ok(out)
}

type Pairs = Vec<(usize, usize)>;

/// Ordered pairs `(c0, c1)` with `c0 ∤ c1`, zero pairs included.
fn ordered_non_contact(cs: &ContactStructure) -> Vec<(usize, usize)> {
    let n = cs.len();
    (0..n)
        .cartesian_product(0..n)
        .filter(|&(x, y)| !cs.relates(x, y))
        .collect()
}

/// First `(a, b, c0, c1)` violating (D1) read literally.
pub fn naive_d1(cs: &ContactStructure) -> Option<(usize, usize, usize, usize)> {
    let n = cs.len();
    for (c0, c1) in ordered_non_contact(cs) {
        for a in 0..n {
            let (s0, s1) = (cs.join(a, c0), cs.join(a, c1));
            for b in 0..n {
                if cs.leq(b, s0) && cs.leq(b, s1) && !cs.leq(b, a) {
                    return Some((a, b, c0, c1));
                }
            }
        }
    }
    None
}

/// First `(a, b, pairs)` violating (D2_n) read literally: every `n`-tuple
/// of ordered non-contact pairs, zero pairs and repeats included.
pub fn naive_d2(cs: &ContactStructure, n: usize) -> Option<(usize, usize, Pairs)> {
    let len = cs.len();
    let pairs = ordered_non_contact(cs);
    for tuple in std::iter::repeat_n(pairs.iter().copied(), n).multi_cartesian_product() {
        let sums: Vec<usize> = (0..1usize << n)
            .map(|f| {
                tuple.iter().enumerate().fold(0, |acc, (i, &(c0, c1))| {
                    cs.join(acc, if f >> i & 1 == 0 { c0 } else { c1 })
                })
            })
            .collect();
        for a in 0..len {
            for b in 0..len {
                if cs.relates(a, b) && sums.iter().all(|&s| cs.leq(a, s) || cs.leq(b, s)) {
                    return Some((a, b, tuple));
                }
            }
        }
    }
    None
}
