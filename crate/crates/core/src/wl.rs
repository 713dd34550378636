//! 1-WL color refinement.
//!
//! Colors start from vertex degrees. Each round maps the key
//! `(own color, sorted neighbor colors)` to a dense id; ids are the ranks of
//! the sorted distinct keys, so the dictionary is injective and a coloring is
//! a pure function of the graph up to relabeling. Refinement stops once a
//! round no longer splits any class.

use crate::graph::Graph;

/// Result of [`wl_refine`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    /// `colors[v]` is a dense id in `0..histogram.len()`.
    pub colors: Vec<usize>,
    /// `histogram[c]` is the number of vertices of color `c`.
    pub histogram: Vec<usize>,
    /// Refinement rounds executed, including the final non-splitting one.
    pub iterations: usize,
    /// Number of color classes after each iteration, starting at iteration 0.
    pub class_counts: Vec<usize>,
}

impl Coloring {
    pub fn num_classes(&self) -> usize {
        self.histogram.len()
    }

    /// Class sizes, sorted ascending.
    pub fn sorted_class_sizes(&self) -> Vec<usize> {
        let mut sizes = self.histogram.clone();
        sizes.sort_unstable();
        sizes
    }
}

/// Keys are compared lexicographically; the first element is the previous
/// color (or the degree at iteration 0).
type Key = Vec<usize>;

/// Ranks the distinct keys and returns `(colors, sorted distinct keys)`.
fn relabel(keys: Vec<Key>) -> (Vec<usize>, Vec<Key>) {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut colors = vec![0; keys.len()];
    let mut table: Vec<Key> = Vec::new();
    for &v in &order {
        if table.last() != Some(&keys[v]) {
            table.push(keys[v].clone());
        }
        colors[v] = table.len() - 1;
    }
    (colors, table)
}

fn initial_keys(g: &Graph) -> Vec<Key> {
    g.degrees().map(|d| vec![d]).collect()
}

fn round_keys(g: &Graph, colors: &[usize]) -> Vec<Key> {
    (0..g.n())
        .map(|v| {
            let mut key = Vec::with_capacity(g.deg(v) + 1);
            key.push(colors[v]);
            let start = key.len();
            key.extend(g.neighbors(v).iter().map(|&u| colors[u as usize]));
            key[start..].sort_unstable();
            key
        })
        .collect()
}

/// Drives refinement, calling `observe(iteration, colors, key_table)` for the
/// initial coloring and after every round. Returns the final colors and the
/// number of rounds executed.
fn run<F>(g: &Graph, max_iters: Option<usize>, mut observe: F) -> (Vec<usize>, usize)
where
    F: FnMut(usize, &[usize], &[Key]) -> bool,
{
    if g.n() == 0 {
        observe(0, &[], &[]);
        return (Vec::new(), 0);
    }
    let (mut colors, table) = relabel(initial_keys(g));
    let mut classes = table.len();
    if !observe(0, &colors, &table) {
        return (colors, 0);
    }
    let mut iterations = 0;
    while max_iters.is_none_or(|cap| iterations < cap) {
        let (next, table) = relabel(round_keys(g, &colors));
        iterations += 1;
        let stable = table.len() == classes;
        classes = table.len();
        colors = next;
        if !observe(iterations, &colors, &table) || stable {
            break;
        }
    }
    (colors, iterations)
}

fn histogram(colors: &[usize], classes: usize) -> Vec<usize> {
    let mut h = vec![0; classes];
    for &c in colors {
        h[c] += 1;
    }
    h
}

/// Runs color refinement until the partition stops splitting or `max_iters`
/// rounds have run (`None` = until stable).
pub fn wl_refine(g: &Graph, max_iters: Option<usize>) -> Coloring {
    let mut class_counts = Vec::new();
    let (colors, iterations) = run(g, max_iters, |_, _, table| {
        class_counts.push(table.len());
        true
    });
    let classes = class_counts.last().copied().unwrap_or(0);
    Coloring {
        histogram: histogram(&colors, classes),
        colors,
        iterations,
        class_counts,
    }
}

/// Outcome of [`wl_joint_refine`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointRefinement {
    pub left: Coloring,
    pub right: Coloring,
    /// First iteration (0 = degree coloring) at which the two color
    /// histograms differ, or `None` if they agree through stabilization.
    pub distinguished_at: Option<usize>,
}

/// Refines both graphs with one shared dictionary so color ids are
/// comparable, by running on their disjoint union.
pub fn wl_joint_refine(g1: &Graph, g2: &Graph, max_iters: Option<usize>) -> JointRefinement {
    let union = g1.disjoint_union(g2);
    let split = g1.n();
    let mut distinguished_at = None;
    let mut counts_left = Vec::new();
    let mut counts_right = Vec::new();
    let (colors, iterations) = run(&union, max_iters, |it, colors, table| {
        let hl = histogram(&colors[..split], table.len());
        let hr = histogram(&colors[split..], table.len());
        counts_left.push(hl.iter().filter(|&&c| c > 0).count());
        counts_right.push(hr.iter().filter(|&&c| c > 0).count());
        if distinguished_at.is_none() && hl != hr {
            distinguished_at = Some(it);
        }
        true
    });
    let classes = colors.iter().copied().max().map_or(0, |c| c + 1);
    let side = |cs: &[usize], class_counts: Vec<usize>| Coloring {
        colors: cs.to_vec(),
        histogram: histogram(cs, classes),
        iterations,
        class_counts,
    };
    JointRefinement {
        left: side(&colors[..split], counts_left),
        right: side(&colors[split..], counts_right),
        distinguished_at,
    }
}

/// Canonical byte string of the full refinement history of `g`.
///
/// For every iteration the sorted table of distinct keys is written with the
/// number of vertices carrying each key. Because keys at iteration `i + 1`
/// refer to ranks at iteration `i`, two graphs produce equal certificates
/// exactly when joint refinement never separates their histograms.
pub fn wl_certificate(g: &Graph, max_iters: Option<usize>) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(&(g.n() as u64).to_le_bytes());
    run(g, max_iters, |it, colors, table| {
        let h = histogram(colors, table.len());
        out.extend_from_slice(&(it as u64).to_le_bytes());
        out.extend_from_slice(&(table.len() as u64).to_le_bytes());
        for (key, count) in table.iter().zip(&h) {
            out.extend_from_slice(&(key.len() as u64).to_le_bytes());
            for &k in key {
                out.extend_from_slice(&(k as u64).to_le_bytes());
            }
            out.extend_from_slice(&(*count as u64).to_le_bytes());
        }
        true
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn regular_graph_is_uniform_after_one_round() {
        let c = wl_refine(&cycle(7), None);
        assert_eq!(c.num_classes(), 1);
        assert_eq!(c.iterations, 1);
        assert_eq!(c.histogram, vec![7]);
    }

    #[test]
    fn star_has_two_classes() {
        let g = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        let c = wl_refine(&g, None);
        assert_eq!(c.sorted_class_sizes(), vec![1, 4]);
        assert_ne!(c.colors[0], c.colors[1]);
    }

    #[test]
    fn path_four_stays_two_classes() {
        let c = wl_refine(&path(4), None);
        assert_eq!(c.class_counts, vec![2, 2]);
        assert_eq!(c.iterations, 1);
        assert_eq!(c.colors[0], c.colors[3]);
        assert_eq!(c.colors[1], c.colors[2]);
    }

    #[test]
    fn path_five_refines_then_stabilizes() {
        // degrees 1,2,2,2,1 -> round 1 splits the middle vertex off.
        let c = wl_refine(&path(5), None);
        assert_eq!(c.class_counts, vec![2, 3, 3]);
        assert_eq!(c.iterations, 2);
    }

    #[test]
    fn max_iters_caps_rounds() {
        let c = wl_refine(&path(7), Some(1));
        assert_eq!(c.iterations, 1);
        let c0 = wl_refine(&path(7), Some(0));
        assert_eq!(c0.iterations, 0);
        assert_eq!(c0.num_classes(), 2);
    }

    #[test]
    fn empty_graph() {
        let c = wl_refine(&Graph::empty(0), None);
        assert_eq!(c.iterations, 0);
        assert!(c.histogram.is_empty());
    }

    #[test]
    fn joint_cycle_vs_two_triangles_never() {
        let two = cycle(3).disjoint_union(&cycle(3));
        let j = wl_joint_refine(&cycle(6), &two, None);
        assert_eq!(j.distinguished_at, None);
        assert_eq!(j.left.histogram, j.right.histogram);
    }

    #[test]
    fn joint_triangle_vs_path_at_zero() {
        let j = wl_joint_refine(&cycle(3), &path(3), None);
        assert_eq!(j.distinguished_at, Some(0));
    }

    #[test]
    fn joint_distinguishes_after_refinement() {
        // Same degree sequence (1,1,2,2,2,2,...) but different structure:
        // P6 versus the disjoint union of P2 and C4.
        let other = path(2).disjoint_union(&cycle(4));
        let j = wl_joint_refine(&path(6), &other, None);
        assert_eq!(j.distinguished_at, Some(1));
    }

    #[test]
    fn certificate_matches_joint_refinement() {
        let two = cycle(3).disjoint_union(&cycle(3));
        assert_eq!(wl_certificate(&cycle(6), None), wl_certificate(&two, None));
        assert_ne!(
            wl_certificate(&path(6), None),
            wl_certificate(&cycle(6), None)
        );
        let other = path(2).disjoint_union(&cycle(4));
        assert_ne!(wl_certificate(&path(6), None), wl_certificate(&other, None));
    }
}
