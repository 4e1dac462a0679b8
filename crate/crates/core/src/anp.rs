//! ANP network model, weighted supermatrix assembly, limit computation, and
//! alternative-priority extraction.
//!
//! Each parent node compares the children it influences inside every target
//! cluster, and splits its total influence across those clusters with an
//! explicit weight vector (the fixed 25%/75% criteria/alternatives rule of a
//! hierarchy-with-feedback model becomes network data here).

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::linalg::{limit_supermatrix_default, SquareMatrix};
use crate::model::{Method, RankingResult, ScoreOrdering};
use crate::pairwise::{
    consistency, priority_vector, ConsistencyPolicy, ConsistencyReport, PairwiseMatrix,
};
use crate::scalar::{real, Real};

/// Named cluster with its member nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct Cluster {
    pub label: String,
    pub nodes: Vec<String>,
}

/// Pairwise comparison of the child nodes one parent influences inside one
/// target cluster. The matrix labels name the children.
#[derive(Debug, Clone, PartialEq)]
pub struct InfluenceBlock<T> {
    pub target_cluster: String,
    pub matrix: PairwiseMatrix<T>,
}

/// Clusters, nodes, per-parent influence blocks, and per-parent cluster
/// splits. The node list fixes the supermatrix row/column order.
#[derive(Debug, Clone, PartialEq)]
pub struct AnpNetwork<T> {
    clusters: Vec<Cluster>,
    nodes: Vec<String>,
    influence_blocks: BTreeMap<String, Vec<InfluenceBlock<T>>>,
    cluster_splits: BTreeMap<String, Vec<(String, T)>>,
}

/// Weighted or limit supermatrix over the network's node order.
#[derive(Debug, Clone, PartialEq)]
pub struct Supermatrix<T> {
    pub matrix: SquareMatrix<T>,
    pub kind: SupermatrixKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupermatrixKind {
    Weighted,
    Limit,
}

/// Consistency diagnostics for one influence block.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockConsistency<T> {
    pub parent: String,
    pub target_cluster: String,
    pub report: ConsistencyReport<T>,
}

/// Full ANP run output, for reporting.
#[derive(Debug, Clone, PartialEq)]
pub struct AnpOutcome<T> {
    pub weighted: Supermatrix<T>,
    pub limit: Supermatrix<T>,
    /// Normalized priorities over the alternatives cluster, in cluster node
    /// order.
    pub ranking: RankingResult<T>,
    pub alternative_labels: Vec<String>,
    pub block_reports: Vec<BlockConsistency<T>>,
}

impl<T: Real> AnpNetwork<T> {
    pub fn new(
        clusters: Vec<Cluster>,
        nodes: Vec<String>,
        influence_blocks: BTreeMap<String, Vec<InfluenceBlock<T>>>,
        cluster_splits: BTreeMap<String, Vec<(String, T)>>,
    ) -> Result<Self> {
        let network = Self {
            clusters,
            nodes,
            influence_blocks,
            cluster_splits,
        };
        network.validate()?;
        Ok(network)
    }

    fn validate(&self) -> Result<()> {
        let mut node_cluster: BTreeMap<&str, &str> = BTreeMap::new();
        let mut cluster_labels = BTreeSet::new();
        for cluster in &self.clusters {
            if !cluster_labels.insert(cluster.label.as_str()) {
                return Err(Error::DuplicateLabel(cluster.label.clone()));
            }
            for node in &cluster.nodes {
                if node_cluster.insert(node, &cluster.label).is_some() {
                    return Err(Error::DuplicateLabel(node.clone()));
                }
            }
        }
        if self.nodes.is_empty() {
            return Err(Error::InvalidNetwork("network has no nodes".into()));
        }
        let node_set: BTreeSet<&str> = self.nodes.iter().map(String::as_str).collect();
        if node_set.len() != self.nodes.len() {
            return Err(Error::InvalidNetwork("node order has duplicates".into()));
        }
        for node in &self.nodes {
            if !node_cluster.contains_key(node.as_str()) {
                return Err(Error::UnknownCluster(format!(
                    "node {node} belongs to no cluster"
                )));
            }
        }
        for node in node_cluster.keys() {
            if !node_set.contains(node) {
                return Err(Error::UnknownNode((*node).to_string()));
            }
        }

        let members: BTreeMap<&str, BTreeSet<&str>> = self
            .clusters
            .iter()
            .map(|c| {
                (
                    c.label.as_str(),
                    c.nodes.iter().map(String::as_str).collect(),
                )
            })
            .collect();
        let split_tol: T = real(1e-9);
        for (parent, blocks) in &self.influence_blocks {
            if !node_set.contains(parent.as_str()) {
                return Err(Error::UnknownNode(parent.clone()));
            }
            if blocks.is_empty() {
                return Err(Error::InvalidNetwork(format!(
                    "parent {parent} has an empty influence list"
                )));
            }
            let mut targeted = BTreeSet::new();
            for block in blocks {
                let member_set = members
                    .get(block.target_cluster.as_str())
                    .ok_or_else(|| Error::UnknownCluster(block.target_cluster.clone()))?;
                if !targeted.insert(block.target_cluster.as_str()) {
                    return Err(Error::InvalidNetwork(format!(
                        "parent {parent} has two blocks for cluster {}",
                        block.target_cluster
                    )));
                }
                let mut seen_children = BTreeSet::new();
                for child in block.matrix.labels() {
                    if !member_set.contains(child.as_str()) {
                        return Err(Error::InvalidNetwork(format!(
                            "child {child} of parent {parent} is not in cluster {}",
                            block.target_cluster
                        )));
                    }
                    if !seen_children.insert(child.as_str()) {
                        return Err(Error::DuplicateLabel(child.clone()));
                    }
                }
            }
            let splits = self.cluster_splits.get(parent).ok_or_else(|| {
                Error::InvalidNetwork(format!("parent {parent} has no cluster split"))
            })?;
            let split_clusters: BTreeSet<&str> =
                splits.iter().map(|(label, _)| label.as_str()).collect();
            if split_clusters.len() != splits.len() {
                return Err(Error::InvalidNetwork(format!(
                    "parent {parent} repeats a cluster in its split"
                )));
            }
            if split_clusters != targeted {
                return Err(Error::InvalidNetwork(format!(
                    "split clusters of parent {parent} do not match its influence blocks"
                )));
            }
            let mut sum = T::zero();
            for (_, weight) in splits {
                if *weight < T::zero() {
                    return Err(Error::InvalidNetwork(format!(
                        "negative split weight for parent {parent}"
                    )));
                }
                sum = sum + *weight;
            }
            if (sum - T::one()).abs() > split_tol {
                return Err(Error::InvalidNetwork(format!(
                    "split weights of parent {parent} do not sum to 1"
                )));
            }
        }
        for parent in self.cluster_splits.keys() {
            if !self.influence_blocks.contains_key(parent) {
                return Err(Error::InvalidNetwork(format!(
                    "parent {parent} has a split but no influence blocks"
                )));
            }
        }
        Ok(())
    }

    pub fn clusters(&self) -> &[Cluster] {
        &self.clusters
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn cluster(&self, label: &str) -> Option<&Cluster> {
        self.clusters.iter().find(|c| c.label == label)
    }

    fn node_index(&self, label: &str) -> Result<usize> {
        self.nodes
            .iter()
            .position(|n| n == label)
            .ok_or_else(|| Error::UnknownNode(label.to_string()))
    }

    fn split_weight(&self, parent: &str, cluster: &str) -> T {
        self.cluster_splits
            .get(parent)
            .and_then(|splits| {
                splits
                    .iter()
                    .find(|(label, _)| label == cluster)
                    .map(|(_, w)| *w)
            })
            .expect("validated split exists for every block")
    }
}

/// Influence weights of one parent over all its children: per target
/// cluster, the block's priority vector scaled by the cluster split; the
/// concatenation sums to 1.
pub fn node_local_priorities<T: Real>(
    parent: &str,
    network: &AnpNetwork<T>,
) -> Result<Vec<(String, T)>> {
    let blocks = network
        .influence_blocks
        .get(parent)
        .ok_or_else(|| Error::UnknownNode(parent.to_string()))?;
    let mut weights = Vec::new();
    for block in blocks {
        let split = network.split_weight(parent, &block.target_cluster);
        // a singleton block needs no eigen-solve
        let priorities = if block.matrix.order() == 1 {
            vec![T::one()]
        } else {
            priority_vector(&block.matrix)?.0
        };
        for (child, priority) in block.matrix.labels().iter().zip(priorities) {
            weights.push((child.clone(), priority * split));
        }
    }
    Ok(weights)
}

/// Assemble the weighted supermatrix: column per parent holding its local
/// priorities at the child rows, zero everywhere else. Nodes without
/// influence blocks produce all-zero columns.
pub fn build_supermatrix<T: Real>(network: &AnpNetwork<T>) -> Result<Supermatrix<T>> {
    let n = network.nodes.len();
    let mut matrix = SquareMatrix::zero(n);
    for parent in network.influence_blocks.keys() {
        let col = network.node_index(parent)?;
        for (child, weight) in node_local_priorities(parent, network)? {
            let row = network.node_index(&child)?;
            matrix.set(row, col, weight);
        }
    }
    Ok(Supermatrix {
        matrix,
        kind: SupermatrixKind::Weighted,
    })
}

/// Consistency diagnostics for every influence block, in node order.
pub fn block_consistency_reports<T: Real>(
    network: &AnpNetwork<T>,
) -> Result<Vec<BlockConsistency<T>>> {
    let mut reports = Vec::new();
    for parent in &network.nodes {
        let Some(blocks) = network.influence_blocks.get(parent) else {
            continue;
        };
        for block in blocks {
            let order = block.matrix.order();
            let lambda = if order == 1 {
                T::one()
            } else {
                priority_vector(&block.matrix)?.1
            };
            reports.push(BlockConsistency {
                parent: parent.clone(),
                target_cluster: block.target_cluster.clone(),
                report: consistency(lambda, order)?,
            });
        }
    }
    Ok(reports)
}

/// Limit the supermatrix and read the alternatives' priorities from the goal
/// column, sum-normalized.
///
/// Nodes that influence nothing are treated as absorbing during the limit
/// (a unit self-loop replaces their zero column); otherwise every path
/// through them would drain mass and a plain hierarchy would limit to the
/// zero matrix instead of its AHP priorities.
pub fn anp_priorities<T: Real>(
    network: &AnpNetwork<T>,
    goal: &str,
    alternatives_cluster: &str,
) -> Result<(RankingResult<T>, Supermatrix<T>)> {
    let goal_index = network.node_index(goal)?;
    let cluster = network
        .cluster(alternatives_cluster)
        .ok_or_else(|| Error::UnknownCluster(alternatives_cluster.to_string()))?;
    if cluster.nodes.is_empty() {
        return Err(Error::InvalidNetwork(format!(
            "alternatives cluster {alternatives_cluster} is empty"
        )));
    }
    let alternative_rows: Vec<usize> = cluster
        .nodes
        .iter()
        .map(|node| network.node_index(node))
        .collect::<Result<_>>()?;

    let weighted = build_supermatrix(network)?;
    let mut powering = weighted.matrix.clone();
    let n = powering.order();
    for j in 0..n {
        let empty = (0..n).all(|i| powering.get(i, j) == T::zero());
        if empty {
            powering.set(j, j, T::one());
        }
    }
    let limit = limit_supermatrix_default(&powering)?;

    let goal_column = limit.column(goal_index);
    let mass: T = alternative_rows.iter().map(|&row| goal_column[row]).sum();
    if mass <= T::zero() {
        return Err(Error::ZeroGoalColumn);
    }
    let scores: Vec<T> = alternative_rows
        .iter()
        .map(|&row| goal_column[row] / mass)
        .collect();
    let ranking = RankingResult::from_scores(
        Method::Anp,
        scores,
        ScoreOrdering::HigherScoreBetter,
        BTreeMap::new(),
    );
    Ok((
        ranking,
        Supermatrix {
            matrix: limit,
            kind: SupermatrixKind::Limit,
        },
    ))
}

/// Run the whole pipeline and collect everything a report needs.
pub fn anp_evaluate<T: Real>(
    network: &AnpNetwork<T>,
    goal: &str,
    alternatives_cluster: &str,
    policy: ConsistencyPolicy,
) -> Result<AnpOutcome<T>> {
    let block_reports = block_consistency_reports(network)?;
    for block in &block_reports {
        block.report.enforce(
            policy,
            &format!(
                "influence of {} on cluster {}",
                block.parent, block.target_cluster
            ),
        )?;
    }
    let weighted = build_supermatrix(network)?;
    let (ranking, limit) = anp_priorities(network, goal, alternatives_cluster)?;
    let alternative_labels = network
        .cluster(alternatives_cluster)
        .expect("cluster checked by anp_priorities")
        .nodes
        .clone();
    Ok(AnpOutcome {
        weighted,
        limit,
        ranking,
        alternative_labels,
        block_reports,
    })
}
