//! Certified `⌈n/2⌉` locating-dominating sets for roundable connected local
//! tournaments.
//!
//! The pipeline segments a round decomposition into consecutive tournaments
//! `D_1,…,D_t`, assembles a locating set `S` backwards (step `t` down to
//! step `1`) with a three-case rule per segment, and finally augments `S`
//! with the at most one undominated vertex. Every intermediate claim the
//! size argument relies on is re-checked at run time and reported as an
//! internal inconsistency if violated.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::ld::{self, CertifiedSet, SetKind, DEFAULT_CUTOFF};
use crate::structure::{round_decomposition, RoundDecomposition};
use crate::vset;

/// Segmentation of a round decomposition into consecutive tournaments.
///
/// `boundaries` holds block counts `i_0 = 0 < i_1 < … < i_t = r`; segment
/// `k` (1-based) is the union of blocks `i_{k−1}+1 ..= i_k` and always
/// induces a tournament. Each boundary is the greatest admissible block
/// index completely dominated by the first block of its segment; when no
/// strictly larger index qualifies the segment degenerates to that single
/// block, so the procedure still terminates at `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segmentation {
    pub boundaries: Vec<usize>,
    /// Vertex set of each segment, ascending ids, index `k-1` for segment `k`.
    pub segments: Vec<Vec<usize>>,
    /// `suffix_sizes[k-1]` = total order of segments `k ..= t`.
    pub suffix_sizes: Vec<usize>,
}

impl Segmentation {
    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }
}

/// Which rule fired at a construction step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepCase {
    /// Last segment, or the set added one segment later is assumed to
    /// dominate it: add a plain tournament set of the whole segment.
    One,
    /// Later segment not assumed dominated and the segment's last block is
    /// a single vertex: add that pivot plus a set of the rest.
    Two,
    /// Later segment not assumed dominated, last block has ≥ 2 vertices:
    /// add a locating-dominating set of the whole segment.
    Three,
}

impl StepCase {
    pub fn tag(&self) -> u8 {
        match self {
            StepCase::One => 1,
            StepCase::Two => 2,
            StepCase::Three => 3,
        }
    }
}

/// One step of the backwards assembly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    /// Segment index `k`, 1-based.
    pub segment: usize,
    pub case: StepCase,
    /// Vertices added to the set at this step, ascending.
    pub added: Vec<usize>,
    /// Whether the added set is assumed to dominate its segment.
    pub assumed_dominating: bool,
    /// The pivot vertex in a case-2 step.
    pub pivot: Option<usize>,
    /// For case-2 steps with odd remainder: whether the added set happened
    /// to dominate the whole segment anyway (not assumed, just observed).
    pub pivot_set_dominates: Option<bool>,
}

/// Full record of the backwards assembly plus the final augmentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    /// Steps in execution order, segment `t` first.
    pub steps: Vec<StepRecord>,
    /// The assembled locating set `S`.
    pub set: Vec<usize>,
    /// The vertex added by the augmentation, if any.
    pub augmentation: Option<usize>,
    /// `S` plus the augmentation vertex.
    pub augmented_set: Vec<usize>,
}

impl ConstructionTrace {
    pub fn step(&self, segment: usize) -> Option<&StepRecord> {
        self.steps.iter().find(|s| s.segment == segment)
    }
}

/// Splits a round decomposition into consecutive tournament segments.
pub fn segment(d: &Digraph, dec: &RoundDecomposition) -> Result<Segmentation> {
    let r = dec.block_count();
    if r < 2 {
        return Err(Error::Internal("segmentation needs at least 2 blocks".into()));
    }
    for i in 0..r - 1 {
        if !dec.quotient.has_arc(i, i + 1) {
            return Err(Error::Internal(format!(
                "consecutive blocks {i} and {} are not completely adjacent",
                i + 1
            )));
        }
    }
    // 1-based block indices to keep the boundary arithmetic readable
    let mut boundaries = vec![0usize];
    while *boundaries.last().expect("nonempty") < r {
        let prev = *boundaries.last().expect("nonempty");
        let first = prev + 1;
        let mut next = first;
        for j in first + 1..=r {
            if dec.quotient.has_arc(first - 1, j - 1) {
                next = next.max(j);
            }
        }
        boundaries.push(next);
    }
    let mut segments = Vec::with_capacity(boundaries.len() - 1);
    for w in boundaries.windows(2) {
        let mut verts = Vec::new();
        for b in w[0]..w[1] {
            verts = vset::union(&verts, &dec.blocks[b]);
        }
        if !d.is_tournament_on(&verts) {
            return Err(Error::Internal(format!(
                "segment over blocks {}..{} does not induce a tournament",
                w[0] + 1,
                w[1]
            )));
        }
        segments.push(verts);
    }
    let t = segments.len();
    let mut suffix_sizes = vec![0usize; t];
    let mut acc = 0usize;
    for k in (0..t).rev() {
        acc += segments[k].len();
        suffix_sizes[k] = acc;
    }
    Ok(Segmentation {
        boundaries,
        segments,
        suffix_sizes,
    })
}

/// Mapped tournament subroutine on an induced vertex set.
fn induced_tournament_set(
    d: &Digraph,
    verts: &[usize],
    kind: SetKind,
    cutoff: usize,
) -> Result<Vec<usize>> {
    let (sub, map) = d.induced(verts)?;
    let set = match kind {
        SetKind::Locating => ld::tournament_locating_set(&sub, cutoff)?,
        SetKind::LocatingDominating => ld::tournament_ld_set(&sub, cutoff)?,
        SetKind::Dominating => {
            return Err(Error::Internal("segments never ask for plain domination".into()))
        }
    };
    Ok(set.vertices.into_iter().map(|v| map[v]).collect())
}

/// Runs the backwards assembly of the locating set `S`.
pub fn construct_set(
    d: &Digraph,
    dec: &RoundDecomposition,
    seg: &Segmentation,
    cutoff: usize,
) -> Result<ConstructionTrace> {
    let t = seg.segment_count();
    let mut steps: Vec<StepRecord> = Vec::with_capacity(t);
    let mut set: Vec<usize> = Vec::new();
    let mut next_assumed = false; // flag of segment k+1 while processing k

    for k in (1..=t).rev() {
        let verts = &seg.segments[k - 1];
        let case = if k == t || next_assumed {
            StepCase::One
        } else {
            let last_block = &dec.blocks[seg.boundaries[k] - 1];
            if last_block.len() == 1 {
                StepCase::Two
            } else {
                StepCase::Three
            }
        };
        let (added, assumed, pivot, pivot_set_dominates) = match case {
            StepCase::One => {
                let kind = if verts.len() % 2 == 0 {
                    SetKind::LocatingDominating
                } else {
                    SetKind::Locating
                };
                let added = induced_tournament_set(d, verts, kind, cutoff)?;
                (added, verts.len() % 2 == 0, None, None)
            }
            StepCase::Two => {
                let pivot = dec.blocks[seg.boundaries[k] - 1][0];
                let rest = vset::difference(verts, &[pivot]);
                let kind = if rest.len() % 2 == 0 {
                    SetKind::LocatingDominating
                } else {
                    SetKind::Locating
                };
                let mut added = if rest.is_empty() {
                    Vec::new()
                } else {
                    induced_tournament_set(d, &rest, kind, cutoff)?
                };
                vset::insert(&mut added, pivot);
                let assumed = rest.len() % 2 == 0;
                let observed = if assumed {
                    None
                } else {
                    let (sub, map) = d.induced(verts)?;
                    let local: Vec<usize> = added
                        .iter()
                        .map(|v| map.binary_search(v).expect("added within segment"))
                        .collect();
                    Some(ld::evaluate_set(&sub, &local).dominating)
                };
                (added, assumed, Some(pivot), observed)
            }
            StepCase::Three => {
                let added =
                    induced_tournament_set(d, verts, SetKind::LocatingDominating, cutoff)?;
                (added, true, None, None)
            }
        };

        // every step must add a locating set of its segment tournament
        let (sub, map) = d.induced(verts)?;
        let local: Vec<usize> = added
            .iter()
            .map(|v| map.binary_search(v).expect("added within segment"))
            .collect();
        let report = ld::evaluate_set(&sub, &local);
        if !report.locating {
            return Err(Error::Internal(format!(
                "step {k}: added set is not a locating set of its segment"
            )));
        }
        if assumed && !report.dominating {
            return Err(Error::Internal(format!(
                "step {k}: set assumed dominating does not dominate its segment"
            )));
        }

        set = vset::union(&set, &added);
        steps.push(StepRecord {
            segment: k,
            case,
            added,
            assumed_dominating: assumed,
            pivot,
            pivot_set_dominates,
        });
        next_assumed = assumed;
    }

    let trace = ConstructionTrace {
        steps,
        set,
        augmentation: None,
        augmented_set: Vec::new(),
    };
    verify_assembly(d, dec, seg, &trace)?;
    Ok(trace)
}

/// Re-checks the properties of `S` the size and correctness arguments use.
fn verify_assembly(
    d: &Digraph,
    dec: &RoundDecomposition,
    seg: &Segmentation,
    trace: &ConstructionTrace,
) -> Result<()> {
    let set = &trace.set;

    // restricted to any block, S locates that block's tournament and is
    // nonempty on blocks with at least two vertices
    for block in &dec.blocks {
        let (sub, map) = d.induced(block)?;
        let local: Vec<usize> = vset::intersection(set, block)
            .iter()
            .map(|v| map.binary_search(v).expect("block vertex"))
            .collect();
        if !ld::evaluate_set(&sub, &local).locating {
            return Err(Error::Internal(format!(
                "assembled set does not locate block {block:?}"
            )));
        }
        if block.len() >= 2 && local.is_empty() {
            return Err(Error::Internal(format!(
                "assembled set misses block {block:?} of size ≥ 2"
            )));
        }
    }

    // suffix-size inequality
    let t = seg.segment_count();
    let mut suffix: Vec<usize> = Vec::new();
    for k in (1..=t).rev() {
        suffix = vset::union(&suffix, &seg.segments[k - 1]);
        let have = vset::intersection(set, &suffix).len();
        if have > seg.suffix_sizes[k - 1] / 2 {
            return Err(Error::Internal(format!(
                "suffix from segment {k} holds {have} set vertices, above ⌊{}⌋/2",
                seg.suffix_sizes[k - 1]
            )));
        }
    }

    // at most one vertex of the whole digraph undominated, and in block 1
    let undominated = ld::evaluate_set(d, set).undominated;
    if undominated.len() > 1 {
        return Err(Error::Internal(format!(
            "{} vertices undominated by the assembled set",
            undominated.len()
        )));
    }
    if let Some(&u) = undominated.first() {
        if !vset::contains(&dec.blocks[0], u) {
            return Err(Error::Internal(format!(
                "undominated vertex {u} lies outside the first block"
            )));
        }
    }
    Ok(())
}

/// Adds the unique undominated vertex of the first segment when the
/// assembled set does not dominate it, and certifies the result.
pub fn augment_set(
    d: &Digraph,
    dec: &RoundDecomposition,
    seg: &Segmentation,
    mut trace: ConstructionTrace,
) -> Result<(CertifiedSet, ConstructionTrace)> {
    let first = &seg.segments[0];
    let (sub, map) = d.induced(first)?;
    let local: Vec<usize> = vset::intersection(&trace.set, first)
        .iter()
        .map(|v| map.binary_search(v).expect("segment vertex"))
        .collect();
    let undominated = ld::evaluate_set(&sub, &local).undominated;
    let augmented = match undominated.len() {
        0 => trace.set.clone(),
        1 => {
            let z = map[undominated[0]];
            if !vset::contains(&dec.blocks[0], z) {
                return Err(Error::Internal(format!(
                    "augmentation vertex {z} lies outside the first block"
                )));
            }
            trace.augmentation = Some(z);
            let mut s = trace.set.clone();
            vset::insert(&mut s, z);
            s
        }
        k => {
            return Err(Error::Internal(format!(
                "{k} vertices of the first segment undominated; expected at most one"
            )))
        }
    };
    trace.augmented_set = augmented.clone();

    let n = d.order();
    let bound = n.div_ceil(2);
    let report = ld::evaluate_set(d, &augmented);
    if !report.ld {
        return Err(Error::Internal(
            "augmented set failed the locating-dominating check".into(),
        ));
    }
    if augmented.len() > bound {
        return Err(Error::Internal(format!(
            "augmented set has {} vertices, above ⌈{n}/2⌉ = {bound}",
            augmented.len()
        )));
    }
    Ok((
        CertifiedSet {
            vertices: augmented,
            kind: SetKind::LocatingDominating,
            claimed_bound: bound,
            verified: true,
            trace_tag: "roundable".into(),
        },
        trace,
    ))
}

/// Full pipeline on a precomputed decomposition.
pub fn solve_roundable_with(
    d: &Digraph,
    dec: &RoundDecomposition,
) -> Result<(CertifiedSet, ConstructionTrace, Segmentation)> {
    let seg = segment(d, dec)?;
    let trace = construct_set(d, dec, &seg, DEFAULT_CUTOFF)?;
    if dec.canonical {
        // on non-strong inputs the unaugmented set is already locating and
        // fits the floor bound
        if !ld::evaluate_set(d, &trace.set).locating {
            return Err(Error::Internal(
                "assembled set is not locating on a non-strong input".into(),
            ));
        }
        if trace.set.len() > d.order() / 2 {
            return Err(Error::Internal(
                "assembled locating set exceeds ⌊n/2⌋ on a non-strong input".into(),
            ));
        }
    }
    let (certified, trace) = augment_set(d, dec, &seg, trace)?;
    Ok((certified, trace, seg))
}

/// Round decomposition, segmentation, backwards assembly, augmentation.
pub fn solve_roundable(d: &Digraph) -> Result<CertifiedSet> {
    Ok(solve_roundable_traced(d)?.0)
}

/// Like [`solve_roundable`] but keeps the full construction record.
pub fn solve_roundable_traced(
    d: &Digraph,
) -> Result<(CertifiedSet, ConstructionTrace, RoundDecomposition, Segmentation)> {
    let dec = round_decomposition(d)?
        .ok_or_else(|| Error::Domain("not roundable: no round decomposition exists".into()))?;
    let (certified, trace, seg) = solve_roundable_with(d, &dec)?;
    Ok((certified, trace, dec, seg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn cycle(n: usize) -> Digraph {
        let arcs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::new(n, &arcs).unwrap()
    }

    fn path3() -> Digraph {
        Digraph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn decomposed(d: &Digraph) -> (RoundDecomposition, Segmentation) {
        let dec = round_decomposition(d).unwrap().unwrap();
        let seg = segment(d, &dec).unwrap();
        (dec, seg)
    }

    #[test]
    fn segmentation_of_path() {
        let d = path3();
        let (_, seg) = decomposed(&d);
        assert_eq!(seg.boundaries, vec![0, 2, 3]);
        assert_eq!(seg.segments, vec![vec![0, 1], vec![2]]);
        assert_eq!(seg.suffix_sizes, vec![3, 1]);
    }

    #[test]
    fn segmentation_of_cycles() {
        let (_, seg) = decomposed(&cycle(4));
        assert_eq!(seg.boundaries, vec![0, 2, 4]);
        assert_eq!(seg.segments, vec![vec![0, 1], vec![2, 3]]);

        let (_, seg) = decomposed(&cycle(5));
        assert_eq!(seg.boundaries, vec![0, 2, 4, 5]);
        assert_eq!(seg.segments, vec![vec![0, 1], vec![2, 3], vec![4]]);
    }

    #[test]
    fn assembly_on_path() {
        let d = path3();
        let (dec, seg) = decomposed(&d);
        let trace = construct_set(&d, &dec, &seg, 20).unwrap();
        let s2 = trace.step(2).unwrap();
        assert_eq!(s2.case, StepCase::One);
        assert!(s2.added.is_empty());
        assert!(!s2.assumed_dominating);
        let s1 = trace.step(1).unwrap();
        assert_eq!(s1.case, StepCase::Two);
        assert_eq!(s1.pivot, Some(1));
        assert_eq!(s1.added, vec![1]);
        assert_eq!(trace.set, vec![1]);

        let (cert, trace) = augment_set(&d, &dec, &seg, trace).unwrap();
        assert_eq!(trace.augmentation, Some(0));
        assert_eq!(cert.vertices, vec![0, 1]);
        assert_eq!(cert.claimed_bound, 2);
        assert!(cert.verified);
    }

    #[test]
    fn assembly_on_four_cycle() {
        let d = cycle(4);
        let (dec, seg) = decomposed(&d);
        let trace = construct_set(&d, &dec, &seg, 20).unwrap();
        let s2 = trace.step(2).unwrap();
        assert_eq!(s2.case, StepCase::One);
        assert_eq!(s2.added, vec![2]);
        assert!(s2.assumed_dominating);
        let s1 = trace.step(1).unwrap();
        assert_eq!(s1.case, StepCase::One);
        assert_eq!(s1.added, vec![0]);
        assert_eq!(trace.set, vec![0, 2]);

        let (cert, trace) = augment_set(&d, &dec, &seg, trace).unwrap();
        assert_eq!(trace.augmentation, None);
        assert_eq!(cert.vertices, vec![0, 2]);
    }

    #[test]
    fn assembly_on_five_cycle() {
        let d = cycle(5);
        let (dec, seg) = decomposed(&d);
        let trace = construct_set(&d, &dec, &seg, 20).unwrap();
        assert_eq!(trace.step(3).unwrap().case, StepCase::One);
        assert!(trace.step(3).unwrap().added.is_empty());
        assert_eq!(trace.step(2).unwrap().pivot, Some(3));
        assert_eq!(trace.step(1).unwrap().pivot, Some(1));
        assert_eq!(trace.set, vec![1, 3]);

        let (cert, trace) = augment_set(&d, &dec, &seg, trace).unwrap();
        assert_eq!(trace.augmentation, Some(0));
        assert_eq!(cert.vertices, vec![0, 1, 3]);
        assert_eq!(cert.size(), 3); // ⌈5/2⌉
    }

    #[test]
    fn solve_roundable_examples() {
        assert_eq!(solve_roundable(&path3()).unwrap().vertices, vec![0, 1]);
        assert_eq!(solve_roundable(&cycle(4)).unwrap().vertices, vec![0, 2]);
        assert_eq!(solve_roundable(&cycle(5)).unwrap().vertices, vec![0, 1, 3]);
    }

    #[test]
    fn random_blowups_within_bound() {
        for seed in 0..60 {
            let d = generators::random_local_tournament(18, seed).unwrap();
            let cl = crate::structure::classify(&d);
            if cl.tournament {
                continue;
            }
            let (cert, _, dec, _) = solve_roundable_traced(&d).unwrap();
            assert!(cert.verified, "seed {seed}");
            assert!(cert.size() <= d.order().div_ceil(2), "seed {seed}");
            if dec.canonical {
                // unaugmented set checked inside the pipeline as locating
                // with the floor bound; re-check from outside
                let trace = solve_roundable_traced(&d).unwrap().1;
                assert!(ld::evaluate_set(&d, &trace.set).locating);
                assert!(trace.set.len() <= d.order() / 2);
            }
        }
    }
}
