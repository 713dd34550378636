//! Deterministic graph generators, a strongly-regular parameter checker and a
//! small exact isomorphism oracle.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::wl::wl_joint_refine;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

/// Cycle `C_n`, `n >= 3`.
pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path on `n >= 1` vertices.
pub fn gen_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs at least 1 vertex"));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Complete graph `K_n`, `n >= 1`.
pub fn gen_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("complete graph needs at least 1 vertex"));
    }
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// Star `S_n`: center 0 joined to `n >= 1` leaves.
pub fn gen_star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("star needs at least 1 leaf"));
    }
    Graph::from_edges(n + 1, (1..=n).map(|i| (0, i)))
}

/// Complete bipartite graph `K_{a,b}`.
pub fn gen_complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(invalid("both sides of K_{a,b} must be non-empty"));
    }
    Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}

pub fn gen_disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    g1.disjoint_union(g2)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Uniformly shuffled relabeling of `0..n`.
pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    perm
}

const MAX_RESTARTS: usize = 10_000;

/// Random simple `d`-regular graph from the pairing model, restarting on
/// loops or repeated pairs.
pub fn gen_random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if (n * d) % 2 == 1 {
        return Err(invalid(format!("n*d must be even (n={n}, d={d})")));
    }
    if d >= n && !(n == 0 && d == 0) {
        return Err(invalid(format!("degree {d} must be below n={n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n * d).map(|p| p / d.max(1)).collect();
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(n * d);
    'restart: for _ in 0..MAX_RESTARTS {
        points.shuffle(&mut rng);
        arcs.clear();
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v {
                continue 'restart;
            }
            arcs.push((u.min(v), u.max(v)));
        }
        arcs.sort_unstable();
        if arcs.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        return Graph::from_edges(n, arcs.iter().copied());
    }
    Err(Error::TooManyRestarts {
        restarts: MAX_RESTARTS,
    })
}

/// `k x k` rook's graph: cells adjacent iff they share a row or column.
pub fn gen_rook(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(invalid(format!("rook graph needs k >= 2, got {k}")));
    }
    let mut edges = Vec::new();
    for a in 0..k * k {
        for b in a + 1..k * k {
            if a / k == b / k || a % k == b % k {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(k * k, edges)
}

/// Cayley graph on `Z4 x Z4` with connection set `±(1,0), ±(0,1), ±(1,1)`.
pub fn gen_shrikhande() -> Result<Graph> {
    let id = |a: usize, b: usize| 4 * (a % 4) + (b % 4);
    let mut edges = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for (da, db) in [(1, 0), (0, 1), (1, 1)] {
                edges.push((id(a, b), id(a + da, b + db)));
            }
        }
    }
    Graph::from_edges(16, edges)
}

/// Outer 5-cycle, inner pentagram, five spokes.
pub fn gen_petersen() -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, edges)
}

fn is_prime(q: usize) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

/// Paley graph on `Z_q`, `q` prime with `q ≡ 1 (mod 4)`.
pub fn gen_paley(q: usize) -> Result<Graph> {
    if !is_prime(q) || q % 4 != 1 {
        return Err(invalid(format!(
            "paley graph needs a prime q with q = 1 mod 4, got {q}"
        )));
    }
    let mut residue = vec![false; q];
    for x in 1..q {
        residue[x * x % q] = true;
    }
    let mut edges = Vec::new();
    for a in 0..q {
        for b in a + 1..q {
            if residue[b - a] {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(q, edges)
}

/// Parameters of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub n: usize,
    pub d: usize,
    /// Common neighbors of every adjacent pair.
    pub beta: usize,
    /// Common neighbors of every non-adjacent pair.
    pub gamma: usize,
    /// No adjacent pairs exist; `beta` is reported as 0.
    pub beta_vacuous: bool,
    /// No non-adjacent pairs exist (complete graphs); `gamma` is reported as 0.
    pub gamma_vacuous: bool,
}

impl SrgParams {
    /// `d (d - beta - 1) = (n - d - 1) gamma`.
    pub fn satisfies_counting_identity(&self) -> bool {
        let lhs = self.d as i64 * (self.d as i64 - self.beta as i64 - 1);
        let rhs = (self.n as i64 - self.d as i64 - 1) * self.gamma as i64;
        lhs == rhs
    }

    pub fn tuple(&self) -> (usize, usize, usize, usize) {
        (self.n, self.d, self.beta, self.gamma)
    }
}

fn common_neighbors(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// Checks regularity and constant common-neighbor counts; `None` if `g` is
/// not strongly regular.
pub fn srg_params(g: &Graph) -> Option<SrgParams> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let d = g.deg(0);
    if g.degrees().any(|x| x != d) {
        return None;
    }
    let (mut beta, mut gamma) = (None, None);
    for u in 0..n {
        for v in u + 1..n {
            let c = common_neighbors(g.neighbors(u), g.neighbors(v));
            let slot = if g.has_edge(u, v) {
                &mut beta
            } else {
                &mut gamma
            };
            match *slot {
                None => *slot = Some(c),
                Some(prev) if prev != c => return None,
                _ => {}
            }
        }
    }
    Some(SrgParams {
        n,
        d,
        beta: beta.unwrap_or(0),
        gamma: gamma.unwrap_or(0),
        beta_vacuous: beta.is_none(),
        gamma_vacuous: gamma.is_none(),
    })
}

/// Largest graph the exact oracle accepts.
pub const ORACLE_MAX_VERTICES: usize = 12;

/// Exact isomorphism test by backtracking, for graphs up to
/// [`ORACLE_MAX_VERTICES`] vertices.
///
/// Candidates for each vertex are restricted to the same stable 1-WL color,
/// and every partial assignment must preserve adjacency with all previously
/// assigned vertices.
pub fn brute_force_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    for g in [g1, g2] {
        if g.n() > ORACLE_MAX_VERTICES {
            return Err(Error::OracleSizeLimit {
                n: g.n(),
                limit: ORACLE_MAX_VERTICES,
            });
        }
    }
    if g1.n() != g2.n() || g1.m() != g2.m() {
        return Ok(false);
    }
    let joint = wl_joint_refine(g1, g2, None);
    if joint.distinguished_at.is_some() {
        return Ok(false);
    }
    let n = g1.n();
    let c1 = &joint.left.colors;
    let c2 = &joint.right.colors;

    // Assign rarer colors first, then follow adjacency so pruning bites early.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let class_size = |c: usize| c1.iter().filter(|&&x| x == c).count();
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = g1
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| placed[w as usize])
                    .count();
                (
                    links,
                    std::cmp::Reverse(class_size(c1[v])),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(g1, g2, c1, c2, &order, 0, &mut map, &mut used))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g1: &Graph,
    g2: &Graph,
    c1: &[usize],
    c2: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..g2.n() {
        if used[w] || c2[w] != c1[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g1.has_edge(u, v) == g2.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g1, g2, c1, c2, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangles(g: &Graph) -> usize {
        g.edges()
            .map(|(u, v)| common_neighbors(g.neighbors(u), g.neighbors(v)))
            .sum::<usize>()
            / 3
    }

    #[test]
    fn small_families() {
        let c6 = gen_cycle(6).unwrap();
        assert_eq!((c6.n(), c6.m()), (6, 6));
        assert!(c6.degrees().all(|d| d == 2));
        assert_eq!(gen_complete(4).unwrap().m(), 6);
        let s = gen_star(4).unwrap();
        assert_eq!(s.degree(0).unwrap(), 4);
        let u = gen_disjoint_union(&gen_complete(3).unwrap(), &gen_complete(3).unwrap());
        assert_eq!((u.n(), u.m()), (6, 6));
        assert!(u.degrees().all(|d| d == 2));
        assert!(gen_cycle(2).is_err());
        assert!(gen_complete(0).is_err());
        assert!(gen_star(0).is_err());
    }

    #[test]
    fn random_regular_basics() {
        let g = gen_random_regular(8, 3, 7).unwrap();
        assert_eq!(g.m(), 12);
        assert!(g.degrees().all(|d| d == 3));
        let c = gen_random_regular(6, 2, 1).unwrap();
        assert!(c.degrees().all(|d| d == 2));
        assert_eq!(gen_random_regular(8, 3, 7).unwrap(), g);
        assert!(gen_random_regular(5, 3, 0).is_err());
        assert!(gen_random_regular(4, 4, 0).is_err());
    }

    #[test]
    fn srg_generators() {
        let p = |g: Result<Graph>| srg_params(&g.unwrap()).map(|s| s.tuple());
        assert_eq!(p(gen_rook(4)), Some((16, 6, 2, 2)));
        assert_eq!(p(gen_shrikhande()), Some((16, 6, 2, 2)));
        assert_eq!(p(gen_petersen()), Some((10, 3, 0, 1)));
        assert_eq!(p(gen_paley(13)), Some((13, 6, 2, 3)));
        assert_eq!(p(gen_paley(5)), Some((5, 2, 0, 1)));
        assert_eq!(p(gen_rook(3)), Some((9, 4, 1, 2)));
    }

    #[test]
    fn paley_rejects_bad_q() {
        for q in [3, 7, 9, 15, 25] {
            assert!(gen_paley(q).is_err(), "q = {q}");
        }
    }

    #[test]
    fn not_srg() {
        assert_eq!(srg_params(&gen_cycle(6).unwrap()), None);
        assert_eq!(srg_params(&gen_star(3).unwrap()), None);
    }

    #[test]
    fn complete_graph_vacuous_gamma() {
        let s = srg_params(&gen_complete(4).unwrap()).unwrap();
        assert_eq!(s.tuple(), (4, 3, 2, 0));
        assert!(s.gamma_vacuous);
        assert!(!s.beta_vacuous);
    }

    #[test]
    fn oracle_basics() {
        let c6 = gen_cycle(6).unwrap();
        let perm = random_permutation(6, 3);
        assert!(brute_force_isomorphic(&c6, &c6.permute(&perm).unwrap()).unwrap());
        let two = gen_disjoint_union(&gen_cycle(3).unwrap(), &gen_cycle(3).unwrap());
        assert!(!brute_force_isomorphic(&c6, &two).unwrap());
    }

    #[test]
    fn oracle_k33_vs_prism() {
        let k33 = gen_complete_bipartite(3, 3).unwrap();
        let prism = Graph::from_edges(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_eq!(triangles(&prism), 2);
        assert_eq!(triangles(&k33), 0);
        assert!(!brute_force_isomorphic(&k33, &prism).unwrap());
    }

    #[test]
    fn oracle_size_cap() {
        let g = gen_cycle(13).unwrap();
        assert_eq!(
            brute_force_isomorphic(&g, &g),
            Err(Error::OracleSizeLimit { n: 13, limit: 12 })
        );
    }
}
