// Oracles that share no code with the library: Prüfer decoding, center-rooted
// AHU strings and exhaustive subset search.

#![allow(dead_code)]

use std::collections::HashSet;

pub type Edges = Vec<(usize, usize)>;

/// Plain O(n^2) Prüfer decoding.
pub fn prufer_edges(seq: &[usize]) -> Edges {
    let n = seq.len() + 2;
    let mut degree = vec![1; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] = 0;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

fn ahu(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| ahu(adj, w, v)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism key: AHU string rooted at the center (or the smaller of the
/// two bicentral rootings).
pub fn center_key(n: usize, edges: &[(usize, usize)]) -> String {
    let adj = adjacency(n, edges);
    if n == 1 {
        return "()".into();
    }
    // strip leaves layer by layer
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| ahu(&adj, c, usize::MAX)).min().unwrap()
}

/// Isomorphism classes of labeled trees on `n` vertices, via all `n^(n-2)`
/// Prüfer sequences.
pub fn prufer_classes(n: usize) -> HashSet<String> {
    let mut out = HashSet::new();
    if n <= 2 {
        out.insert(center_key(n, &if n == 2 { vec![(0, 1)] } else { vec![] }));
        return out;
    }
    let mut seq = vec![0; n - 2];
    loop {
        out.insert(center_key(n, &prufer_edges(&seq)));
        let mut i = 0;
        while i < seq.len() && seq[i] == n - 1 {
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            return out;
        }
        seq[i] += 1;
    }
}

/// Minimum TOIDS size by scanning every subset; `forced` must be inside.
pub fn naive_gamma(n: usize, edges: &[(usize, usize)], forced: &[usize]) -> usize {
    assert!(n <= 22, "naive oracle is exponential");
    let adj: Vec<u32> = (0..n)
        .map(|v| edges.iter().fold(0, |m, &(a, b)| if a == v { m | 1 << b } else if b == v { m | 1 << a } else { m }))
        .collect();
    let must: u32 = forced.iter().fold(0, |m, &v| m | 1 << v);
    let mut best = usize::MAX;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best || mask & must != must {
            continue;
        }
        let total = (0..n).all(|v| adj[v] & mask != 0);
        let outer_independent = edges.iter().all(|&(a, b)| mask >> a & 1 == 1 || mask >> b & 1 == 1);
        if total && outer_independent {
            best = size;
        }
    }
    best
}

/// Edges of `S(T)`: original ids kept, midpoint of the `k`-th edge is `n + k`.
pub fn subdivision_edges(n: usize, edges: &[(usize, usize)]) -> Edges {
    edges.iter().enumerate().flat_map(|(k, &(a, b))| [(a, n + k), (b, n + k)]).collect()
}
