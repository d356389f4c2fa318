//! Locating / dominating predicates, signature partitions, the exact
//! brute-force oracle, and the tournament subroutines the solvers plug in.
//!
//! Terminology: a vertex set `S` *dominates* a digraph if every vertex
//! outside `S` has an in-neighbour in `S`; it *locates* if any two outside
//! vertices have different in-neighbourhoods inside `S` (the empty signature
//! counts like any other, so at most one outside vertex may be undominated
//! by a locating set).

use std::collections::BTreeMap;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::vset;

/// Default order cutoff for the exact subset-enumeration searches.
pub const DEFAULT_CUTOFF: usize = 20;

/// What a vertex set is asked (or certified) to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetKind {
    Dominating,
    Locating,
    LocatingDominating,
}

impl SetKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SetKind::Dominating => "dominating",
            SetKind::Locating => "locating",
            SetKind::LocatingDominating => "locating-dominating",
        }
    }
}

impl std::fmt::Display for SetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of checking a candidate set against the definitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetReport {
    /// Vertices outside the set with no in-neighbour in the set, ascending.
    pub undominated: Vec<usize>,
    /// Pairs `(x, y)` with `x < y` outside the set whose in-neighbourhoods
    /// inside the set coincide, in lexicographic order.
    pub unlocated_pairs: Vec<(usize, usize)>,
    pub dominating: bool,
    pub locating: bool,
    pub ld: bool,
}

/// Partition of the vertices outside `S` by their in-neighbourhood
/// signature inside `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SPartition {
    /// signature (sorted) → vertices carrying it (sorted)
    pub parts: BTreeMap<Vec<usize>, Vec<usize>>,
    /// number of parts of size exactly 1
    pub n1: usize,
    /// number of parts of size at least 2
    pub n2: usize,
}

impl SPartition {
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }
}

/// A vertex set together with the claim it was constructed to satisfy.
/// `verified` is only set after an actual [`evaluate_set`] check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedSet {
    pub vertices: Vec<usize>,
    pub kind: SetKind,
    pub claimed_bound: usize,
    pub verified: bool,
    /// Which construction produced the set (e.g. `"exact"`, `"roundable"`).
    pub trace_tag: String,
}

impl CertifiedSet {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

/// Checks the definitions exhaustively and reports every violation.
pub fn evaluate_set(d: &Digraph, set: &[usize]) -> SetReport {
    let set = vset::normalize(set.to_vec());
    let outside: Vec<usize> = (0..d.order()).filter(|v| !vset::contains(&set, *v)).collect();
    let sigs: Vec<Vec<usize>> = outside
        .iter()
        .map(|&v| vset::intersection(d.in_neighbours(v), &set))
        .collect();

    let undominated: Vec<usize> = outside
        .iter()
        .zip(&sigs)
        .filter(|(_, sig)| sig.is_empty())
        .map(|(&v, _)| v)
        .collect();

    let mut unlocated_pairs = Vec::new();
    for i in 0..outside.len() {
        for j in i + 1..outside.len() {
            if sigs[i] == sigs[j] {
                unlocated_pairs.push((outside[i], outside[j]));
            }
        }
    }

    let dominating = undominated.is_empty();
    let locating = unlocated_pairs.is_empty();
    SetReport {
        undominated,
        unlocated_pairs,
        dominating,
        locating,
        ld: dominating && locating,
    }
}

/// True when `set` satisfies `kind` on `d`.
pub fn satisfies(d: &Digraph, set: &[usize], kind: SetKind) -> bool {
    let report = evaluate_set(d, set);
    match kind {
        SetKind::Dominating => report.dominating,
        SetKind::Locating => report.locating,
        SetKind::LocatingDominating => report.ld,
    }
}

/// Groups the vertices outside `set` by signature.
pub fn s_partition(d: &Digraph, set: &[usize]) -> SPartition {
    let set = vset::normalize(set.to_vec());
    let mut parts: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..d.order() {
        if !vset::contains(&set, v) {
            let sig = vset::intersection(d.in_neighbours(v), &set);
            parts.entry(sig).or_default().push(v);
        }
    }
    let n1 = parts.values().filter(|p| p.len() == 1).count();
    let n2 = parts.values().filter(|p| p.len() >= 2).count();
    SPartition { parts, n1, n2 }
}

/// Bitmask-backed membership check used by the exact searches (order ≤ 64).
struct MaskChecker {
    in_masks: Vec<u64>,
    n: usize,
}

impl MaskChecker {
    fn new(d: &Digraph) -> Self {
        let n = d.order();
        debug_assert!(n <= 64);
        let mut in_masks = vec![0u64; n];
        for v in 0..n {
            for &u in d.in_neighbours(v) {
                in_masks[v] |= 1 << u;
            }
        }
        MaskChecker { in_masks, n }
    }

    fn satisfies(&self, set_mask: u64, kind: SetKind, scratch: &mut Vec<u64>) -> bool {
        scratch.clear();
        for v in 0..self.n {
            if set_mask >> v & 1 == 0 {
                let sig = self.in_masks[v] & set_mask;
                if sig == 0 && kind != SetKind::Locating {
                    return false;
                }
                scratch.push(sig);
            }
        }
        if kind == SetKind::Dominating {
            return true;
        }
        scratch.sort_unstable();
        scratch.windows(2).all(|w| w[0] != w[1])
    }
}

/// Visits the size-`k` subsets of `0..n` in lexicographic order.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(u64) -> bool) -> Option<u64> {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << i);
        if f(mask) {
            return Some(mask);
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < n - (k - i) {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Minimum-cardinality set of the requested kind, found by subset
/// enumeration in increasing cardinality with lexicographic tie-break.
pub fn exact_min_set(d: &Digraph, kind: SetKind, cutoff: usize) -> Result<CertifiedSet> {
    let n = d.order();
    if n > cutoff {
        return Err(Error::InfeasibleSize(format!(
            "exact search needs order ≤ {cutoff}, got {n}"
        )));
    }
    let checker = MaskChecker::new(d);
    let mut scratch = Vec::with_capacity(n);
    for k in 0..=n {
        if let Some(mask) = for_each_subset(n, k, |m| checker.satisfies(m, kind, &mut scratch)) {
            let vertices: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            debug_assert!(satisfies(d, &vertices, kind));
            return Ok(CertifiedSet {
                vertices,
                kind,
                claimed_bound: k,
                verified: true,
                trace_tag: "exact".into(),
            });
        }
    }
    Err(Error::Internal(
        "the full vertex set must satisfy every kind".into(),
    ))
}

fn require_tournament(d: &Digraph) -> Result<()> {
    let all = d.vertices();
    if !d.is_tournament_on(&all) {
        return Err(Error::Domain("not a tournament".into()));
    }
    Ok(())
}

/// A locating set of a tournament of size at most `⌊n/2⌋` (the minimum one
/// when the order is within the cutoff). Every tournament admits one, so
/// the increasing-cardinality search halts within the bound.
pub fn tournament_locating_set(d: &Digraph, cutoff: usize) -> Result<CertifiedSet> {
    require_tournament(d)?;
    let mut set = exact_min_set(d, SetKind::Locating, cutoff)?;
    let bound = d.order() / 2;
    if set.size() > bound {
        return Err(Error::Internal(format!(
            "minimum locating set of a tournament exceeded ⌊n/2⌋ = {bound}"
        )));
    }
    set.claimed_bound = bound;
    set.trace_tag = "tournament-locating".into();
    Ok(set)
}

/// A locating-dominating set of a tournament of size at most `⌈n/2⌉`
/// (minimum within the cutoff).
pub fn tournament_ld_set(d: &Digraph, cutoff: usize) -> Result<CertifiedSet> {
    require_tournament(d)?;
    let mut set = exact_min_set(d, SetKind::LocatingDominating, cutoff)?;
    let bound = d.order().div_ceil(2);
    if set.size() > bound {
        return Err(Error::Internal(format!(
            "minimum locating-dominating set of a tournament exceeded ⌈n/2⌉ = {bound}"
        )));
    }
    set.claimed_bound = bound;
    set.trace_tag = "tournament-ld".into();
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> Digraph {
        Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn c4() -> Digraph {
        Digraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn evaluate_set_examples() {
        let r = evaluate_set(&c3(), &[0, 1]);
        assert!(r.ld);

        let r = evaluate_set(&c3(), &[0]);
        assert!(r.locating && !r.dominating);
        assert_eq!(r.undominated, vec![2]);

        let r = evaluate_set(&c4(), &[0, 2]);
        assert!(r.ld);
    }

    #[test]
    fn s_partition_examples() {
        // star 0→1, 0→2 with arc 1→2
        let d = Digraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let p = s_partition(&d, &[0]);
        assert_eq!(p.part_count(), 1);
        assert_eq!(p.parts[&vec![0]], vec![1, 2]);
        assert_eq!((p.n1, p.n2), (0, 1));

        // hub 0 → 1,2,3; triangle 1→2→3→1; S = {hub, 1}
        let d = Digraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]).unwrap();
        let p = s_partition(&d, &[0, 1]);
        assert_eq!(p.parts[&vec![0, 1]], vec![2]);
        assert_eq!(p.parts[&vec![0]], vec![3]);
        assert_eq!((p.n1, p.n2), (2, 0));

        // empty set: single all-vertices part with empty signature
        let p = s_partition(&c3(), &[]);
        assert_eq!(p.part_count(), 1);
        assert_eq!(p.parts[&vec![]], vec![0, 1, 2]);
    }

    #[test]
    fn locating_iff_all_parts_singleton() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..60 {
            let n = rng.gen_range(1..=8);
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(0.3) {
                        arcs.push((u, v));
                    }
                }
            }
            let d = Digraph::new(n, &arcs).unwrap();
            let set: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
            let rep = evaluate_set(&d, &set);
            let part = s_partition(&d, &set);
            assert_eq!(rep.locating, part.parts.values().all(|p| p.len() == 1));
        }
    }

    #[test]
    fn exact_min_examples() {
        let s = exact_min_set(&c3(), SetKind::LocatingDominating, 20).unwrap();
        assert_eq!(s.size(), 2);
        assert_eq!(s.vertices, vec![0, 1]); // lexicographic tie-break

        let s = exact_min_set(&c3(), SetKind::Locating, 20).unwrap();
        assert_eq!(s.size(), 1);
        assert_eq!(s.vertices, vec![0]);

        let s = exact_min_set(&c3(), SetKind::Dominating, 20).unwrap();
        assert_eq!(s.size(), 2);
    }

    #[test]
    fn exact_min_respects_cutoff() {
        let d = Digraph::new(21, &[]).unwrap();
        assert!(matches!(
            exact_min_set(&d, SetKind::Dominating, 20),
            Err(Error::InfeasibleSize(_))
        ));
    }

    #[test]
    fn tournament_subroutine_examples() {
        let single = Digraph::new(1, &[]).unwrap();
        let s = tournament_locating_set(&single, 20).unwrap();
        assert!(s.vertices.is_empty());
        assert_eq!(s.claimed_bound, 0);

        let s = tournament_ld_set(&single, 20).unwrap();
        assert_eq!(s.vertices, vec![0]);

        // transitive tournament a→b→c, a→c: {b} locates
        let t3 = Digraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let s = tournament_locating_set(&t3, 20).unwrap();
        assert_eq!(s.vertices, vec![1]);
        let s = tournament_ld_set(&t3, 20).unwrap();
        assert_eq!(s.size(), 2);

        let s = tournament_locating_set(&c3(), 20).unwrap();
        assert_eq!(s.vertices, vec![0]);
        let s = tournament_ld_set(&c3(), 20).unwrap();
        assert_eq!(s.size(), 2);

        let arc = Digraph::new(2, &[(0, 1)]).unwrap();
        let s = tournament_ld_set(&arc, 20).unwrap();
        assert_eq!(s.vertices, vec![0]);

        assert!(tournament_ld_set(&c4(), 20).is_err()); // not a tournament
    }

    /// Independent oracle: checks the definitions with naive set scans over
    /// all 2^n subsets, no bitmasks, no cardinality pruning.
    fn naive_min(d: &Digraph, kind: SetKind) -> usize {
        let n = d.order();
        let mut best = usize::MAX;
        for mask in 0..(1u32 << n) {
            let set: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            if satisfies(d, &set, kind) {
                best = best.min(set.len());
            }
        }
        best
    }

    #[test]
    fn exact_min_matches_naive_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let n = rng.gen_range(1..=7);
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(0.35) {
                        arcs.push((u, v));
                    }
                }
            }
            let d = Digraph::new(n, &arcs).unwrap();
            for kind in [
                SetKind::Dominating,
                SetKind::Locating,
                SetKind::LocatingDominating,
            ] {
                assert_eq!(exact_min_set(&d, kind, 20).unwrap().size(), naive_min(&d, kind));
            }
        }
    }

    #[test]
    fn location_vs_ld_sandwich() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..40 {
            let n = rng.gen_range(1..=10);
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(0.3) {
                        arcs.push((u, v));
                    }
                }
            }
            let d = Digraph::new(n, &arcs).unwrap();
            let loc = exact_min_set(&d, SetKind::Locating, 20).unwrap().size();
            let ld = exact_min_set(&d, SetKind::LocatingDominating, 20).unwrap().size();
            assert!(loc <= ld && ld <= loc + 1);
        }
    }

    #[test]
    fn supersets_of_dominating_sets_dominate() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..40 {
            let n = rng.gen_range(2..=9);
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(0.4) {
                        arcs.push((u, v));
                    }
                }
            }
            let d = Digraph::new(n, &arcs).unwrap();
            let base = exact_min_set(&d, SetKind::Dominating, 20).unwrap().vertices;
            let mut sup = base.clone();
            for v in 0..n {
                if rng.gen_bool(0.5) {
                    crate::vset::insert(&mut sup, v);
                }
            }
            assert!(evaluate_set(&d, &sup).dominating);
        }
    }

    #[test]
    fn all_but_one_inneighboured_vertex_is_ld() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..40 {
            let n = rng.gen_range(2..=9);
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(0.4) {
                        arcs.push((u, v));
                    }
                }
            }
            let d = Digraph::new(n, &arcs).unwrap();
            for x in 0..n {
                if d.in_degree(x) > 0 {
                    let set: Vec<usize> = (0..n).filter(|&v| v != x).collect();
                    assert!(evaluate_set(&d, &set).ld);
                }
            }
        }
    }
}
