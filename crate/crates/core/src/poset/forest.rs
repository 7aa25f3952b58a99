//! Naturally labeled decreasing trees and forests.
//!
//! A decreasing tree is built recursively: either the one-element poset, or a
//! relabeled disjoint union of decreasing trees with a new maximum adjoined on
//! top; a forest is a relabeled disjoint union of trees. Concretely these are
//! exactly the posets whose Hasse diagram gives every element at most one
//! upper cover and whose covers all point from smaller to larger labels, which
//! puts them in bijection with "parent maps" p(v) ∈ {v+1..n} ∪ {none}.

use super::LabeledPoset;
use crate::error::{Error, Result};

/// Recursive construction of a naturally labeled decreasing tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeSpec {
    /// The one-element tree.
    Leaf,
    /// `(T_1 ⊔_{S_1} … ⊔ T_m) ⊕ leaf`: subtrees placed on the ordered
    /// partition `parts` of `{1..k}` (k = sum of subtree sizes), with a new
    /// root labeled k+1 on top.
    Node {
        children: Vec<TreeSpec>,
        parts: Vec<Vec<usize>>,
    },
}

impl TreeSpec {
    pub fn size(&self) -> usize {
        match self {
            TreeSpec::Leaf => 1,
            TreeSpec::Node { children, .. } => {
                1 + children.iter().map(|c| c.size()).sum::<usize>()
            }
        }
    }

    pub fn build(&self) -> Result<LabeledPoset> {
        match self {
            TreeSpec::Leaf => Ok(LabeledPoset::antichain(1)),
            TreeSpec::Node { children, parts } => {
                if children.is_empty() {
                    return Err(Error::InvalidSpec("node with no subtrees".into()));
                }
                let built: Vec<LabeledPoset> =
                    children.iter().map(|c| c.build()).collect::<Result<_>>()?;
                let base = LabeledPoset::disjoint_union_parts(&built, parts)?;
                Ok(base.ordinal_sum(&LabeledPoset::antichain(1)))
            }
        }
    }
}

/// A forest: trees placed on an ordered partition of the ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestSpec {
    pub trees: Vec<TreeSpec>,
    pub parts: Vec<Vec<usize>>,
}

impl ForestSpec {
    pub fn build(&self) -> Result<LabeledPoset> {
        if self.trees.is_empty() {
            return Err(Error::InvalidSpec("empty forest".into()));
        }
        let built: Vec<LabeledPoset> =
            self.trees.iter().map(|t| t.build()).collect::<Result<_>>()?;
        LabeledPoset::disjoint_union_parts(&built, &self.parts)
    }
}

/// Structural validator: Hasse diagram is a forest with roots on top
/// (every element has at most one upper cover) and the labeling is natural
/// (every cover points from a smaller to a larger label).
pub fn is_decreasing_forest(p: &LabeledPoset) -> bool {
    let covers = p.covers();
    let mut upper = vec![0usize; p.n() + 1];
    for &(a, b) in &covers {
        if a >= b {
            return false;
        }
        upper[a] += 1;
        if upper[a] > 1 {
            return false;
        }
    }
    true
}

/// Builds a forest from its parent map: `parents[v-1]` is the label covering
/// `v`, or 0 for a root. Requires `parents[v-1] > v` or 0.
pub fn forest_from_parents(parents: &[usize]) -> Result<LabeledPoset> {
    let n = parents.len();
    let mut covers = Vec::new();
    for (i, &par) in parents.iter().enumerate() {
        let v = i + 1;
        if par != 0 {
            if par <= v || par > n {
                return Err(Error::InvalidSpec(format!(
                    "parent of {v} must be in {}..={n} or absent",
                    v + 1
                )));
            }
            covers.push((v, par));
        }
    }
    LabeledPoset::from_covers(n, &covers)
}

/// Uniformly random naturally labeled decreasing forest on `{1..size}`:
/// parent maps are in bijection with these forests, and each `p(v)` is drawn
/// uniformly from `{v+1..n} ∪ {none}`.
pub fn random_decreasing_forest(size: usize, rng: &mut impl rand::Rng) -> LabeledPoset {
    let parents: Vec<usize> = (1..=size)
        .map(|v| {
            let c = rng.gen_range(v..=size);
            if c == v {
                0
            } else {
                c
            }
        })
        .collect();
    forest_from_parents(&parents).unwrap()
}

/// All naturally labeled decreasing forests on `{1..n}` (there are n! of
/// them), enumerated through their parent maps.
pub fn enumerate_decreasing_forests(n: usize) -> Vec<LabeledPoset> {
    let mut out = Vec::new();
    let mut parents = vec![0usize; n];
    fn rec(v: usize, n: usize, parents: &mut Vec<usize>, out: &mut Vec<LabeledPoset>) {
        if v > n {
            out.push(forest_from_parents(parents).unwrap());
            return;
        }
        parents[v - 1] = 0;
        rec(v + 1, n, parents, out);
        for par in (v + 1)..=n {
            parents[v - 1] = par;
            rec(v + 1, n, parents, out);
        }
        parents[v - 1] = 0;
    }
    rec(1, n, &mut parents, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn leaf_is_singleton() {
        assert_eq!(TreeSpec::Leaf.build().unwrap(), LabeledPoset::antichain(1));
    }

    #[test]
    fn sec5_example_tree() {
        // T1 = covers {1<3, 2<3}; T2 = chain 1<2
        let t1 = TreeSpec::Node {
            children: vec![TreeSpec::Leaf, TreeSpec::Leaf],
            parts: vec![vec![1], vec![2]],
        };
        let t2 = TreeSpec::Node {
            children: vec![TreeSpec::Leaf],
            parts: vec![vec![1]],
        };
        let t = TreeSpec::Node {
            children: vec![t1, t2],
            parts: vec![vec![1, 2, 3], vec![4, 5]],
        };
        let poset = t.build().unwrap();
        assert_eq!(
            poset.covers(),
            vec![(1, 3), (2, 3), (3, 6), (4, 5), (5, 6)]
        );
        assert!(is_decreasing_forest(&poset));
    }

    #[test]
    fn enumeration_counts_and_validator() {
        for n in 1..=5usize {
            let all = enumerate_decreasing_forests(n);
            assert_eq!(all.len(), (1..=n).product::<usize>());
            let distinct: HashSet<_> = all.iter().map(|p| p.relations()).collect();
            assert_eq!(distinct.len(), all.len());
            for f in &all {
                assert!(is_decreasing_forest(f));
            }
        }
    }

    #[test]
    fn recursive_specs_match_parent_maps() {
        // every poset produced by a random spec appears in the parent-map
        // enumeration, and vice versa the spec closure is exhaustive at n<=4
        let spec_posets: HashSet<_> = all_forest_specs(4)
            .into_iter()
            .map(|s| s.build().unwrap().relations())
            .collect();
        let parent_posets: HashSet<_> = enumerate_decreasing_forests(4)
            .into_iter()
            .map(|p| p.relations())
            .collect();
        assert_eq!(spec_posets, parent_posets);
    }

    fn compositions(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for rest in compositions(n - first) {
                let mut v = vec![first];
                v.extend(rest);
                out.push(v);
            }
        }
        out
    }

    fn ordered_partitions(universe: Vec<usize>, sizes: &[usize]) -> Vec<Vec<Vec<usize>>> {
        if sizes.is_empty() {
            return if universe.is_empty() {
                vec![vec![]]
            } else {
                vec![]
            };
        }
        let mut out = Vec::new();
        let k = sizes[0];
        for mask in 0u32..1 << universe.len() {
            if mask.count_ones() as usize != k {
                continue;
            }
            let mut first = Vec::new();
            let mut rest = Vec::new();
            for (i, &v) in universe.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    first.push(v);
                } else {
                    rest.push(v);
                }
            }
            for mut tail in ordered_partitions(rest, &sizes[1..]) {
                let mut v = vec![first.clone()];
                v.append(&mut tail);
                out.push(v);
            }
        }
        out
    }

    fn all_tree_specs(n: usize) -> Vec<TreeSpec> {
        if n == 1 {
            return vec![TreeSpec::Leaf];
        }
        let mut out = Vec::new();
        for comp in compositions(n - 1) {
            let child_sets: Vec<Vec<TreeSpec>> =
                comp.iter().map(|&k| all_tree_specs(k)).collect();
            for parts in ordered_partitions((1..n).collect(), &comp) {
                let mut stack: Vec<Vec<TreeSpec>> = vec![vec![]];
                for set in &child_sets {
                    let mut next = Vec::new();
                    for prefix in &stack {
                        for t in set {
                            let mut p = prefix.clone();
                            p.push(t.clone());
                            next.push(p);
                        }
                    }
                    stack = next;
                }
                for children in stack {
                    out.push(TreeSpec::Node {
                        children,
                        parts: parts.clone(),
                    });
                }
            }
        }
        out
    }

    fn all_forest_specs(n: usize) -> Vec<ForestSpec> {
        let mut out = Vec::new();
        for comp in compositions(n) {
            let tree_sets: Vec<Vec<TreeSpec>> =
                comp.iter().map(|&k| all_tree_specs(k)).collect();
            for parts in ordered_partitions((1..=n).collect(), &comp) {
                let mut stack: Vec<Vec<TreeSpec>> = vec![vec![]];
                for set in &tree_sets {
                    let mut next = Vec::new();
                    for prefix in &stack {
                        for t in set {
                            let mut p = prefix.clone();
                            p.push(t.clone());
                            next.push(p);
                        }
                    }
                    stack = next;
                }
                for trees in stack {
                    out.push(ForestSpec {
                        trees,
                        parts: parts.clone(),
                    });
                }
            }
        }
        out
    }

    // ordered_partitions keeps the relative order of `universe` by index
    // partition; elements must be handed over as values, not indices. The
    // partition above uses enumerate indices — map them back.
    #[test]
    fn ordered_partitions_are_value_based() {
        let parts = ordered_partitions(vec![3, 5], &[1, 1]);
        assert!(parts.contains(&vec![vec![3], vec![5]]));
    }

    #[test]
    fn random_forests_validate() {
        let mut rng = crate::verify::seeded_rng(5);
        for _ in 0..50 {
            let f = random_decreasing_forest(7, &mut rng);
            assert!(is_decreasing_forest(&f));
        }
    }

    #[test]
    fn bad_specs_rejected() {
        let bad = ForestSpec {
            trees: vec![TreeSpec::Leaf, TreeSpec::Leaf],
            parts: vec![vec![1], vec![1]],
        };
        assert!(matches!(bad.build(), Err(Error::InvalidSpec(_))));
        let wrong_size = ForestSpec {
            trees: vec![TreeSpec::Leaf],
            parts: vec![vec![1, 2]],
        };
        assert!(matches!(
            wrong_size.build(),
            Err(Error::SizeMismatch { .. })
        ));
    }
}
