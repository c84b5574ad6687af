use super::{solve_cubic_real, CubicCoeffs, Spectrum, SymmetricMatrix};
use crate::{Error, Result, Topology, WeightVector};

fn check_dimension(t: Topology, w: &WeightVector) -> Result<()> {
    t.validate()?;
    if w.len() != t.edge_count() {
        return Err(Error::DimensionMismatch {
            topology: t,
            expected: t.edge_count(),
            found: w.len(),
        });
    }
    Ok(())
}

/// Weighted Laplacian `D − A`.
pub fn build_laplacian(t: Topology, w: &WeightVector) -> Result<SymmetricMatrix> {
    check_dimension(t, w)?;
    let mut m = SymmetricMatrix::zeros(t.order());
    for ((i, j), &l) in t.edges().into_iter().zip(w.values()) {
        m.add(i, i, l);
        m.add(j, j, l);
        m.add(i, j, -l);
    }
    Ok(m)
}

/// Characteristic cubic of the three slots besides the forced zero, written
/// in terms of elementary symmetric functions of the weights.
///
/// For a 4-vertex Laplacian the coefficients are `−e1(λ)`, `e2(λ)`, `−e3(λ)`:
///
/// * star: `2Σl`, `3(l1l2+l1l3+l2l3)`, `4l1l2l3`;
/// * cycle: `2Σl`, `3(l1l2+l2l3+l3l4+l4l1) + 4(l1l3+l2l4)`,
///   `4(l1l2l3+l1l2l4+l1l3l4+l2l3l4)`;
/// * path: the cycle coefficients with the closing edge set to zero;
/// * kite: `2Σl`, `3(l1l2+l1l3+l2l3+l2l4+l3l4) + 4l1l4`,
///   `4(l1l2l4+l1l3l4+l2l3l4)`;
/// * `K4`: 2-edge forests weighted by the product of their tree sizes
///   (3 for adjacent edges, 4 for disjoint ones) and 4 times the weighted
///   spanning-tree count.
pub fn reduced_cubic(t: Topology, w: &WeightVector) -> Result<CubicCoeffs> {
    check_dimension(t, w)?;
    let l = w.values();
    let (e1, e2, e3) = match t {
        Topology::Star => star_symmetrics(l[0], l[1], l[2]),
        Topology::Cycle4 => cycle_symmetrics(l[0], l[1], l[2], l[3]),
        Topology::Path4 => cycle_symmetrics(l[0], l[1], l[2], 0.0),
        Topology::Kite => kite_symmetrics(l[0], l[1], l[2], l[3]),
        Topology::Complete(4) => forest_symmetrics(&t.edges(), l),
        other => return Err(Error::NoClosedForm(other)),
    };
    Ok(CubicCoeffs::new(-e1, e2, -e3))
}

fn star_symmetrics(l1: f64, l2: f64, l3: f64) -> (f64, f64, f64) {
    (
        2.0 * (l1 + l2 + l3),
        3.0 * (l1 * l2 + l1 * l3 + l2 * l3),
        4.0 * l1 * l2 * l3,
    )
}

fn cycle_symmetrics(l1: f64, l2: f64, l3: f64, l4: f64) -> (f64, f64, f64) {
    (
        2.0 * (l1 + l2 + l3 + l4),
        3.0 * (l1 * l2 + l2 * l3 + l3 * l4 + l4 * l1) + 4.0 * (l1 * l3 + l2 * l4),
        4.0 * (l1 * l2 * l3 + l1 * l2 * l4 + l1 * l3 * l4 + l2 * l3 * l4),
    )
}

fn kite_symmetrics(l1: f64, l2: f64, l3: f64, l4: f64) -> (f64, f64, f64) {
    (
        2.0 * (l1 + l2 + l3 + l4),
        3.0 * (l1 * l2 + l1 * l3 + l2 * l3 + l2 * l4 + l3 * l4) + 4.0 * l1 * l4,
        4.0 * (l1 * l2 * l4 + l1 * l3 * l4 + l2 * l3 * l4),
    )
}

/// Forest expansion of the characteristic polynomial on 4 vertices.
fn forest_symmetrics(edges: &[(usize, usize)], l: &[f64]) -> (f64, f64, f64) {
    let shares =
        |a: (usize, usize), b: (usize, usize)| a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
    let e1 = 2.0 * l.iter().sum::<f64>();
    let mut e2 = 0.0;
    let mut e3 = 0.0;
    let m = edges.len();
    for a in 0..m {
        for b in a + 1..m {
            let sizes = if shares(edges[a], edges[b]) { 3.0 } else { 4.0 };
            e2 += sizes * l[a] * l[b];
            for c in b + 1..m {
                if spans_four(&[edges[a], edges[b], edges[c]]) {
                    e3 += 4.0 * l[a] * l[b] * l[c];
                }
            }
        }
    }
    (e1, e2, e3)
}

/// Three edges on four vertices form a spanning tree iff they are acyclic.
fn spans_four(edges: &[(usize, usize); 3]) -> bool {
    let mut parent = [0usize, 1, 2, 3];
    fn find(parent: &[usize; 4], mut x: usize) -> usize {
        while parent[x] != x {
            x = parent[x];
        }
        x
    }
    for &(i, j) in edges {
        let (ri, rj) = (find(&parent, i), find(&parent, j));
        if ri == rj {
            return false;
        }
        parent[ri] = rj;
    }
    true
}

/// `{0} ∪ roots(reduced_cubic)`, sorted.
pub fn spectrum_closed_form(t: Topology, w: &WeightVector) -> Result<Spectrum> {
    let roots = solve_cubic_real(&reduced_cubic(t, w)?)?;
    let mut values = vec![0.0];
    values.extend(roots);
    Ok(Spectrum::new(values))
}

/// Multiplies every weight by `factor > 0`; the spectrum scales the same way.
pub fn scale_weights(w: &WeightVector, factor: f64) -> Result<WeightVector> {
    if !(factor.is_finite() && factor > 0.0) {
        return Err(Error::NonPositiveScale(factor));
    }
    WeightVector::new(w.values().iter().map(|v| v * factor).collect())
}
