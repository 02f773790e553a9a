//! Breadth-first enumeration of all basic support tau-tilting pairs by
//! repeated downward mutation from `(A, 0)`.
//!
//! Every pair is reachable from the top one by a chain of left
//! mutations, and every arrow of the exchange quiver is realized by a
//! mutation, so the search discovers both the vertex set and the full
//! Hasse quiver of the generation order.
//!
//! Determinism: within each breadth level the mutation tasks are listed
//! in (node, position) order, computed (possibly in parallel) into a
//! vector that preserves that order, and merged into the registry
//! sequentially. Node numbering and edge order therefore do not depend
//! on thread count.

use std::collections::HashMap;

use quiver_algebra::{Fingerprint, PathAlgebra};

use crate::mutate::mutate_down;
use crate::pair::{pairs_isomorphic, STauPair};
use crate::{Result, TauTiltingError};

/// Guard rails and execution switches for [`enumerate`].
#[derive(Debug, Clone)]
pub struct EnumerationOptions {
    /// Stop (with `complete = false`) once this many pairs exist.
    pub node_bound: usize,
    /// Stop (with `complete = false`) if a module part exceeds this
    /// total dimension.
    pub dim_bound: usize,
    /// Use the data-parallel mutation kernel when the `parallel`
    /// feature is enabled.
    pub parallel: bool,
    /// Re-verify every discovered pair against the defining conditions.
    pub verify: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            node_bound: 100_000,
            dim_bound: 4096,
            parallel: true,
            verify: true,
        }
    }
}

/// An arrow of the exchange quiver: `from` covers `to` in the
/// generation order, and the two pairs differ exactly at summand
/// position `exchanged` of `from`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseEdge {
    pub from: usize,
    pub to: usize,
    pub exchanged: usize,
}

/// The exchange quiver of basic support tau-tilting pairs. Node 0 is
/// always `(A, 0)`; arrows point from larger to smaller torsion class.
#[derive(Debug, Clone)]
pub struct ExchangeGraph {
    pub nodes: Vec<STauPair>,
    pub edges: Vec<HasseEdge>,
    /// `false` when a bound in [`EnumerationOptions`] cut the search off.
    pub complete: bool,
}

impl ExchangeGraph {
    /// (out-degree, in-degree) of every node.
    pub fn degrees(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(0usize, 0usize); self.nodes.len()];
        for e in &self.edges {
            out[e.from].0 += 1;
            out[e.to].1 += 1;
        }
        out
    }
}

type Key = (Vec<Fingerprint>, Vec<usize>);

/// Enumerates all basic support tau-tilting pairs of `alg` together
/// with the exchange quiver.
pub fn enumerate(alg: &PathAlgebra, opts: &EnumerationOptions) -> Result<ExchangeGraph> {
    let top = STauPair::initial(alg);
    if opts.verify {
        top.verify(alg)?;
    }
    let mut nodes: Vec<STauPair> = vec![top];
    let mut registry: HashMap<Key, Vec<usize>> = HashMap::new();
    registry.insert(nodes[0].key(alg), vec![0]);
    let mut edges: Vec<HasseEdge> = Vec::new();
    let mut seen_edges: HashMap<(usize, usize), usize> = HashMap::new();
    let mut frontier: Vec<usize> = vec![0];
    let mut complete = true;

    'bfs: while !frontier.is_empty() {
        let tasks: Vec<(usize, usize)> = frontier
            .iter()
            .flat_map(|&id| (0..nodes[id].summands.len()).map(move |pos| (id, pos)))
            .collect();
        let results = run_tasks(alg, &nodes, &tasks, opts.parallel);
        let mut next: Vec<usize> = Vec::new();
        for (&(id, pos), res) in tasks.iter().zip(results) {
            let Some(child) = res? else { continue };
            let key = child.key(alg);
            let bucket = registry.entry(key).or_default();
            let mut found = None;
            for &cid in bucket.iter() {
                if pairs_isomorphic(alg, &child, &nodes[cid]) {
                    found = Some(cid);
                    break;
                }
            }
            let cid = match found {
                Some(cid) => cid,
                None => {
                    let mdim: usize = child.summands.iter().map(|s| s.total_dim()).sum();
                    if mdim > opts.dim_bound || nodes.len() >= opts.node_bound {
                        complete = false;
                        break 'bfs;
                    }
                    if opts.verify {
                        child.verify(alg)?;
                    }
                    let cid = nodes.len();
                    bucket.push(cid);
                    nodes.push(child);
                    next.push(cid);
                    cid
                }
            };
            if let Some(&other) = seen_edges.get(&(id, cid)) {
                return Err(TauTiltingError::MutationFailure {
                    reason: format!(
                        "positions {other} and {pos} of pair {id} produced the same \
                         exchange partner {cid}"
                    ),
                });
            }
            seen_edges.insert((id, cid), pos);
            edges.push(HasseEdge {
                from: id,
                to: cid,
                exchanged: pos,
            });
        }
        frontier = next;
    }

    Ok(ExchangeGraph {
        nodes,
        edges,
        complete,
    })
}

#[cfg(feature = "parallel")]
fn run_tasks(
    alg: &PathAlgebra,
    nodes: &[STauPair],
    tasks: &[(usize, usize)],
    parallel: bool,
) -> Vec<Result<Option<STauPair>>> {
    use rayon::prelude::*;
    if parallel {
        tasks
            .par_iter()
            .map(|&(id, pos)| mutate_down(alg, &nodes[id], pos))
            .collect()
    } else {
        tasks
            .iter()
            .map(|&(id, pos)| mutate_down(alg, &nodes[id], pos))
            .collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn run_tasks(
    alg: &PathAlgebra,
    nodes: &[STauPair],
    tasks: &[(usize, usize)],
    _parallel: bool,
) -> Vec<Result<Option<STauPair>>> {
    tasks
        .iter()
        .map(|&(id, pos)| mutate_down(alg, &nodes[id], pos))
        .collect()
}
