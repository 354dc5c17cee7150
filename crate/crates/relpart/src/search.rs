//! Exhaustive searches: deciding partitionability by exact-cover
//! backtracking, and finding shellings by ordered search with dead-state
//! memoization. Both are deterministic for a fixed configuration and
//! distinguish "provably none" from "budget ran out".

use crate::face::Face;
use crate::relative::RelComplex;
use crate::scheme::{
    candidate_minima, verify_partitioning, verify_shelling, Interval, PartitionScheme,
    ShellingOrder,
};
use crate::vectors::h_vector;
use std::collections::{BTreeMap, HashSet};
use thiserror::Error;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> SearchConfig {
        SearchConfig {
            node_budget: 100_000_000,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("search aborted after {nodes} nodes: resource budget exhausted")]
pub struct ResourceLimit {
    pub nodes: u64,
}

/// Why a complex is known to be non-partitionable.
#[derive(Debug, PartialEq, Eq)]
pub enum Exhaustion {
    /// Pure complex with a negative h-entry: interval counts cannot be
    /// negative, so no scheme exists.
    NegativeH { index: usize, value: i64 },
    /// The backtracking search ran to completion without a cover.
    Exhausted { nodes: u64 },
}

#[derive(Debug)]
pub enum Decision {
    Found(PartitionScheme),
    Unpartitionable(Exhaustion),
}

/// Decide partitionability of a relative complex.
///
/// Search formulation: each facet must be the top of exactly one interval
/// (no other interval may contain it), so a scheme is an assignment
/// facet → interval minimum with pairwise-disjoint intervals covering all
/// faces. Facets are processed in a fixed fail-first order (fewest candidate
/// minima first); per-face counts of remaining potential coverers prune
/// branches that starve a face.
pub fn decide_partitionable(
    rc: &RelComplex,
    config: &SearchConfig,
) -> Result<Decision, ResourceLimit> {
    let faces: Vec<Face> = rc.faces().iter().cloned().collect();
    if faces.is_empty() {
        return Ok(Decision::Found(PartitionScheme::default()));
    }
    if rc.is_pure() {
        if let Some((index, value)) = h_vector(rc).has_negative_entry() {
            return Ok(Decision::Unpartitionable(Exhaustion::NegativeH {
                index,
                value,
            }));
        }
    }

    let index: BTreeMap<&Face, usize> = faces.iter().zip(0..).collect();
    let facets = rc.facets();

    // Candidate intervals per facet, as face-index lists, in the canonical
    // minima order (dimension then lex).
    let mut cands: Vec<Vec<(Face, Vec<usize>)>> = Vec::with_capacity(facets.len());
    // All faces a given facet could ever cover = the faces of rc below it.
    let mut coverable: Vec<Vec<usize>> = Vec::with_capacity(facets.len());
    for facet in &facets {
        let minima = candidate_minima(rc, facet).expect("facets() yields facets");
        let mut cand = Vec::with_capacity(minima.len());
        for min in minima {
            let iv = Interval::new(min.clone(), facet.clone());
            let idxs: Vec<usize> = iv.faces().iter().map(|f| index[f]).collect();
            cand.push((min, idxs));
        }
        let mut cover: Vec<usize> = cand
            .iter()
            .flat_map(|(_, idxs)| idxs.iter().copied())
            .collect();
        cover.sort_unstable();
        cover.dedup();
        coverable.push(cover);
        cands.push(cand);
    }

    // Fail-first static order; ties broken by the facet itself.
    let mut order: Vec<usize> = (0..facets.len()).collect();
    order.sort_by_key(|&i| (cands[i].len(), facets[i].clone()));

    let mut remaining = vec![0u32; faces.len()];
    for cover in &coverable {
        for &t in cover {
            remaining[t] += 1;
        }
    }

    struct State<'a> {
        order: &'a [usize],
        cands: &'a [Vec<(Face, Vec<usize>)>],
        coverable: &'a [Vec<usize>],
        occupied: Vec<bool>,
        remaining: Vec<u32>,
        chosen: Vec<usize>,
        nodes: u64,
        budget: u64,
    }

    fn assign(st: &mut State<'_>, pos: usize) -> Result<bool, ResourceLimit> {
        if pos == st.order.len() {
            return Ok(true);
        }
        let fi = st.order[pos];
        for ci in 0..st.cands[fi].len() {
            st.nodes += 1;
            if st.nodes > st.budget {
                return Err(ResourceLimit { nodes: st.nodes });
            }
            let idxs = &st.cands[fi][ci].1;
            if idxs.iter().any(|&t| st.occupied[t]) {
                continue;
            }
            for &t in idxs {
                st.occupied[t] = true;
            }
            let mut starved = false;
            for &t in &st.coverable[fi] {
                st.remaining[t] -= 1;
                if st.remaining[t] == 0 && !st.occupied[t] {
                    starved = true;
                }
            }
            if !starved {
                st.chosen[pos] = ci;
                if assign(st, pos + 1)? {
                    return Ok(true);
                }
            }
            for &t in &st.coverable[fi] {
                st.remaining[t] += 1;
            }
            for &t in idxs {
                st.occupied[t] = false;
            }
        }
        Ok(false)
    }

    let mut st = State {
        order: &order,
        cands: &cands,
        coverable: &coverable,
        occupied: vec![false; faces.len()],
        remaining,
        chosen: vec![0; facets.len()],
        nodes: 0,
        budget: config.node_budget,
    };

    if assign(&mut st, 0)? {
        let intervals = order
            .iter()
            .zip(&st.chosen)
            .map(|(&fi, &ci)| Interval::new(cands[fi][ci].0.clone(), facets[fi].clone()))
            .collect();
        let scheme = PartitionScheme::new(intervals);
        debug_assert_eq!(verify_partitioning(rc, &scheme), Ok(()));
        Ok(Decision::Found(scheme))
    } else {
        Ok(Decision::Unpartitionable(Exhaustion::Exhausted {
            nodes: st.nodes,
        }))
    }
}

#[derive(Debug)]
pub enum ShellingDecision {
    Found(ShellingOrder),
    NoShelling,
}

pub fn find_shelling(rc: &RelComplex) -> Result<ShellingDecision, ResourceLimit> {
    find_shelling_with(rc, &SearchConfig::default())
}

/// Backtracking over facet orders. Whether a facet can come next depends only
/// on the *set* of facets already placed (Λ is determined by the set), so
/// dead sets are memoized and the state space is at most 2^m.
pub fn find_shelling_with(
    rc: &RelComplex,
    config: &SearchConfig,
) -> Result<ShellingDecision, ResourceLimit> {
    let facets = rc.facets();
    let m = facets.len();
    if m == 0 {
        return Ok(ShellingDecision::Found(ShellingOrder::new(Vec::new())));
    }
    if m > 64 {
        // The subset memo is keyed on a 64-bit mask.
        return Err(ResourceLimit { nodes: 0 });
    }

    let total_faces: Vec<Face> = rc.total().faces().iter().cloned().collect();
    let index: BTreeMap<&Face, usize> = total_faces.iter().zip(0..).collect();
    let in_gamma: Vec<bool> = total_faces
        .iter()
        .map(|f| rc.relative().contains(f))
        .collect();
    // For each face of Δ, the mask of relative facets containing it.
    let mut containing = vec![0u64; total_faces.len()];
    for (fi, facet) in facets.iter().enumerate() {
        for sub in facet.subsets() {
            containing[index[&sub]] |= 1 << fi;
        }
    }
    // Per facet: its subsets as (global index, local vertex mask, dim).
    let mut locals: Vec<Vec<(usize, u32, i64)>> = Vec::with_capacity(m);
    for facet in &facets {
        let n = facet.vertices().len();
        let mut subs = Vec::with_capacity(1 << n);
        for (mask, sub) in facet.subsets().into_iter().enumerate() {
            subs.push((index[&sub], mask as u32, sub.dim()));
        }
        locals.push(subs);
    }

    let gamma_void = rc.relative().is_void();
    let addable = |used: u64, fi: usize| -> bool {
        let lambda_void = gamma_void && used == 0;
        if lambda_void {
            return true;
        }
        let subs = &locals[fi];
        let in_lambda: Vec<bool> = subs
            .iter()
            .map(|&(g, _, _)| in_gamma[g] || containing[g] & used != 0)
            .collect();
        let want = facets[fi].dim() - 1;
        for (i, &(_, mi, di)) in subs.iter().enumerate() {
            if !in_lambda[i] || di == want {
                continue;
            }
            // A non-ridge-dimension member must be below some other member.
            let dominated = subs
                .iter()
                .enumerate()
                .any(|(j, &(_, mj, _))| i != j && in_lambda[j] && mi & mj == mi);
            if !dominated {
                return false;
            }
        }
        true
    };

    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut dead: HashSet<u64> = HashSet::new();
    let mut sequence = vec![0usize; m];
    let mut nodes: u64 = 0;

    fn dfs(
        used: u64,
        depth: usize,
        m: usize,
        full: u64,
        addable: &dyn Fn(u64, usize) -> bool,
        dead: &mut HashSet<u64>,
        sequence: &mut [usize],
        nodes: &mut u64,
        budget: u64,
    ) -> Result<bool, ResourceLimit> {
        if used == full {
            return Ok(true);
        }
        if dead.contains(&used) {
            return Ok(false);
        }
        for fi in 0..m {
            if used & (1 << fi) != 0 {
                continue;
            }
            *nodes += 1;
            if *nodes > budget {
                return Err(ResourceLimit { nodes: *nodes });
            }
            if addable(used, fi) {
                sequence[depth] = fi;
                if dfs(
                    used | (1 << fi),
                    depth + 1,
                    m,
                    full,
                    addable,
                    dead,
                    sequence,
                    nodes,
                    budget,
                )? {
                    return Ok(true);
                }
            }
        }
        dead.insert(used);
        Ok(false)
    }

    if dfs(
        0,
        0,
        m,
        full,
        &addable,
        &mut dead,
        &mut sequence,
        &mut nodes,
        config.node_budget,
    )? {
        let order = ShellingOrder::new(sequence.iter().map(|&fi| facets[fi].clone()).collect());
        debug_assert_eq!(verify_shelling(rc, &order), Ok(()));
        Ok(ShellingDecision::Found(order))
    } else {
        Ok(ShellingDecision::NoShelling)
    }
}
