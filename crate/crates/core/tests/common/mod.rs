//! Reference computations written directly from the definitions, sharing no
//! code with the library's solvers.
#![allow(dead_code)]

use dirichlet_hodge::WeightedGraph;

/// `Σ_e c_e (f(head) - f(tail))²`.
pub fn energy(g: &WeightedGraph, f: &[f64]) -> f64 {
    g.edges().iter().map(|e| e.conductance * (f[e.head] - f[e.tail]).powi(2)).sum()
}

/// `Σ_e c_e u(e) v(e)`.
pub fn form_inner(g: &WeightedGraph, u: &[f64], v: &[f64]) -> f64 {
    g.edges().iter().enumerate().map(|(i, e)| e.conductance * u[i] * v[i]).sum()
}

/// Net weighted outflow per unit mass at every vertex.
pub fn divergence(g: &WeightedGraph, v: &[f64]) -> Vec<f64> {
    (0..g.vertex_count())
        .map(|x| {
            let mut s = 0.0;
            for (i, e) in g.edges().iter().enumerate() {
                if e.tail == x {
                    s += e.conductance * v[i];
                }
                if e.head == x {
                    s -= e.conductance * v[i];
                }
            }
            s / g.measure()[x]
        })
        .collect()
}

/// `½ Σ_{e ∋ x} c_e u(e)²` for every vertex `x`.
pub fn gamma(g: &WeightedGraph, u: &[f64]) -> Vec<f64> {
    (0..g.vertex_count())
        .map(|x| {
            g.edges()
                .iter()
                .enumerate()
                .filter(|(_, e)| e.tail == x || e.head == x)
                .map(|(i, e)| 0.5 * e.conductance * u[i] * u[i])
                .sum()
        })
        .collect()
}

/// Dense conductance matrix `c[x][y]`.
pub fn conductance_matrix(g: &WeightedGraph) -> Vec<Vec<f64>> {
    let n = g.vertex_count();
    let mut c = vec![vec![0.0; n]; n];
    for e in g.edges() {
        c[e.tail][e.head] += e.conductance;
        c[e.head][e.tail] += e.conductance;
    }
    c
}

/// Eliminates every vertex outside `keep` by the star-mesh transform and
/// returns the conductances among `keep`, indexed by position in `keep`.
pub fn star_mesh(g: &WeightedGraph, keep: &[usize]) -> Vec<Vec<f64>> {
    let n = g.vertex_count();
    let mut c = conductance_matrix(g);
    let mut alive = vec![true; n];
    let kept: Vec<bool> = (0..n).map(|x| keep.contains(&x)).collect();
    for z in 0..n {
        if kept[z] {
            continue;
        }
        alive[z] = false;
        let nbrs: Vec<usize> = (0..n).filter(|&y| alive[y] && c[z][y] != 0.0).collect();
        let total: f64 = nbrs.iter().map(|&y| c[z][y]).sum();
        for &a in &nbrs {
            for &b in &nbrs {
                if a < b {
                    let add = c[z][a] * c[z][b] / total;
                    c[a][b] += add;
                    c[b][a] += add;
                }
            }
        }
        for y in 0..n {
            c[z][y] = 0.0;
            c[y][z] = 0.0;
        }
    }
    keep.iter().map(|&a| keep.iter().map(|&b| if a == b { 0.0 } else { c[a][b] }).collect()).collect()
}

/// Rank by Gaussian elimination with partial pivoting; entries below
/// `tol · max|a|` count as zero.
pub fn rank(mut rows: Vec<Vec<f64>>, tol: f64) -> usize {
    let scale = rows.iter().flatten().fold(0.0_f64, |m, x| m.max(x.abs()));
    if scale == 0.0 {
        return 0;
    }
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).max_by(|&a, &b| rows[a][c].abs().total_cmp(&rows[b][c].abs())) else {
            break;
        };
        if rows[p][c].abs() <= tol * scale {
            continue;
        }
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            let f = rows[i][c] / rows[r][c];
            for j in c..cols {
                rows[i][j] -= f * rows[r][j];
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Solves a small dense system by Gaussian elimination with pivoting.
pub fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for c in 0..n {
        let p = (c..n).max_by(|&x, &y| a[x][c].abs().total_cmp(&a[y][c].abs())).unwrap();
        a.swap(c, p);
        b.swap(c, p);
        for i in c + 1..n {
            let f = a[i][c] / a[c][c];
            for j in c..n {
                a[i][j] -= f * a[c][j];
            }
            b[i] -= f * b[c];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|j| a[i][j] * x[j]).sum();
        x[i] = (b[i] - s) / a[i][i];
    }
    x
}

/// Kirchhoff potentials for unit current entering at `source` and leaving at
/// `sink`, grounded at `sink`.
pub fn kirchhoff_potential(g: &WeightedGraph, source: usize, sink: usize) -> Vec<f64> {
    let n = g.vertex_count();
    let c = conductance_matrix(g);
    let others: Vec<usize> = (0..n).filter(|&x| x != sink).collect();
    let a: Vec<Vec<f64>> = others
        .iter()
        .map(|&x| {
            others.iter().map(|&y| if x == y { c[x].iter().sum() } else { -c[x][y] }).collect()
        })
        .collect();
    let b: Vec<f64> = others.iter().map(|&x| if x == source { 1.0 } else { 0.0 }).collect();
    let sol = solve(a, b);
    let mut phi = vec![0.0; n];
    for (&x, v) in others.iter().zip(sol) {
        phi[x] = v;
    }
    phi
}

/// Graph distances from `start` by breadth-first search.
pub fn distances(g: &WeightedGraph, start: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut d = vec![usize::MAX; n];
    d[start] = 0;
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &x in &frontier {
            for e in g.edges() {
                if e.touches(x) {
                    let y = e.other(x);
                    if d[y] == usize::MAX {
                        d[y] = d[x] + 1;
                        next.push(y);
                    }
                }
            }
        }
        frontier = next;
    }
    d
}
