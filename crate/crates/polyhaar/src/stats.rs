//! Geometric estimators on individual polygons and exact edge-set-ensemble
//! averages.
//!
//! The ensemble quantities come in pairs: a closed-form expression
//! ([`schord_formula`], [`sgyradius_formula`]) and a brute-force oracle that
//! averages over all n! edge orderings. The oracles exist to certify the
//! formulas and are capped at n ≤ 8.

use crate::polygon::{Dim, Polygon, CLOSURE_TOL};
use crate::quat::Vec3;
use crate::{Error, Result};

/// Largest edge set the permutation oracles accept (8! = 40320 orderings).
pub const ORACLE_MAX_EDGES: usize = 8;

/// |Σ eᵢ|, the distance by which the polygon fails to close.
pub fn closure_defect(p: &Polygon) -> f64 {
    p.closure_defect()
}

/// Squared length of the chord that skips `start` edges and then spans `k`
/// edges: |e_{start+1} + … + e_{start+k}|². Closed polygons wrap cyclically;
/// open polygons require `start + k ≤ n`.
pub fn chord_sq(p: &Polygon, start: usize, k: usize) -> Result<f64> {
    let n = p.n();
    let bad = k == 0
        || k > n
        || (p.closed() && start >= n)
        || (!p.closed() && start + k > n);
    if bad {
        return Err(Error::ChordOutOfRange { start, k, n });
    }
    let mut sum = Vec3::ZERO;
    for j in 0..k {
        sum += p.edges()[(start + j) % n];
    }
    Ok(sum.norm_sq())
}

/// Mean of `chord_sq` over all starts: the n cyclic chords of a closed
/// polygon, or the n−k+1 in-order chords of an open one.
pub fn mean_chord_sq(p: &Polygon, k: usize) -> Result<f64> {
    let n = p.n();
    if k == 0 || k > n {
        return Err(Error::ChordOutOfRange { start: 0, k, n });
    }
    // vertex prefix sums make every chord a difference of two positions
    let verts = p.vertices();
    let total = verts[n];
    let mut sum = 0.0;
    if p.closed() {
        for start in 0..n {
            let chord = if start + k <= n {
                verts[start + k] - verts[start]
            } else {
                verts[start + k - n] + total - verts[start]
            };
            sum += chord.norm_sq();
        }
        Ok(sum / n as f64)
    } else {
        for start in 0..=(n - k) {
            sum += (verts[start + k] - verts[start]).norm_sq();
        }
        Ok(sum / (n - k + 1) as f64)
    }
}

/// Radius of gyration: half the average squared distance between ordered
/// vertex pairs. Open polygons have n+1 vertices; closed polygons count n
/// (the repeated endpoint is dropped).
///
/// Evaluated in O(n) through the centroid identity
/// Σᵢⱼ |vᵢ−vⱼ|² = 2m Σᵢ |vᵢ−v̄|².
pub fn gyradius(p: &Polygon) -> f64 {
    gyradius_of_edges(p.edges(), p.closed())
}

fn gyradius_of_edges(edges: &[Vec3], closed: bool) -> f64 {
    let m = if closed { edges.len() } else { edges.len() + 1 };
    let mut v = Vec3::ZERO;
    let mut sum = Vec3::ZERO;
    for &e in &edges[..m - 1] {
        v += e;
        sum += v;
    }
    let centroid = sum * (1.0 / m as f64);
    let mut v = Vec3::ZERO;
    let mut total = centroid.norm_sq();
    for &e in &edges[..m - 1] {
        v += e;
        total += (v - centroid).norm_sq();
    }
    total / m as f64
}

/// Sum of exterior (turning) angles in radians: n−1 bends for an open arm,
/// n for a closed polygon including the wrap-around bend.
pub fn total_curvature(p: &Polygon) -> Result<f64> {
    const TOL: f64 = 1e-12;
    let edges = p.edges();
    let n = edges.len();
    let norms: Vec<f64> = edges.iter().map(|e| e.norm()).collect();
    if let Some(index) = norms.iter().position(|&e| e == 0.0) {
        return Err(Error::ZeroLengthEdge { index });
    }
    let bends = if p.closed() { n } else { n - 1 };
    let mut total = 0.0;
    for i in 0..bends {
        let j = (i + 1) % n;
        let c = edges[i].dot(edges[j]) / (norms[i] * norms[j]);
        if !(-1.0 - TOL..=1.0 + TOL).contains(&c) {
            return Err(Error::AngleDomain { value: c, tol: TOL });
        }
        total += c.clamp(-1.0, 1.0).acos();
    }
    Ok(total)
}

/// Project a space polygon onto the plane orthogonal to `normal`,
/// expressing edges in an orthonormal basis of that plane. Closure is
/// preserved and no renormalization is applied, so the total length can
/// only shrink.
pub fn project_to_plane(p: &Polygon, normal: Vec3) -> Result<Polygon> {
    if p.dim() != Dim::Three {
        return Err(Error::DimMismatch {
            expected: 3,
            got: p.dim().as_usize(),
        });
    }
    let norm = normal.norm();
    if norm == 0.0 {
        return Err(Error::ZeroNormal);
    }
    let w = normal * (1.0 / norm);
    // axis least aligned with the normal seeds a stable basis
    let axis = if w.x.abs() <= w.y.abs() && w.x.abs() <= w.z.abs() {
        Vec3::new(1.0, 0.0, 0.0)
    } else if w.y.abs() <= w.z.abs() {
        Vec3::new(0.0, 1.0, 0.0)
    } else {
        Vec3::new(0.0, 0.0, 1.0)
    };
    let u0 = w.cross(axis);
    let u = u0 * (1.0 / u0.norm());
    let v = w.cross(u);
    let edges = p
        .edges()
        .iter()
        .map(|&e| Vec3::new(e.dot(u), e.dot(v), 0.0))
        .collect();
    Ok(Polygon::new_unchecked(Dim::Two, p.closed(), edges))
}

/// Scale every edge so the total length becomes `len`. Gyradius scales by
/// the square of the ratio.
pub fn rescale_to_length(p: &Polygon, len: f64) -> Result<Polygon> {
    if !(len > 0.0 && len.is_finite()) {
        return Err(Error::invalid(format!("target length {len} must be positive")));
    }
    let total = p.total_length();
    if total == 0.0 {
        return Err(Error::ZeroTotalLength);
    }
    let s = len / total;
    let edges = p.edges().iter().map(|&e| e * s).collect();
    Ok(Polygon::new_unchecked(p.dim(), p.closed(), edges))
}

/// An unordered multiset of edge vectors. Ensemble averages over all edge
/// orderings depend only on this data; |Σ eᵢ| in particular is invariant
/// under rearrangement.
#[derive(Debug, Clone)]
pub struct EdgeSet {
    dim: Dim,
    edges: Vec<Vec3>,
}

impl EdgeSet {
    pub fn new(dim: Dim, edges: Vec<Vec3>) -> Result<Self> {
        if edges.len() < 2 {
            return Err(Error::TooFewEdges {
                kind: "edge set",
                min: 2,
                n: edges.len(),
            });
        }
        if edges.iter().any(|e| !e.is_finite()) {
            return Err(Error::NonFinite);
        }
        if dim == Dim::Two && edges.iter().any(|e| e.z != 0.0) {
            return Err(Error::NotPlanar);
        }
        Ok(EdgeSet { dim, edges })
    }

    pub fn from_polygon(p: &Polygon) -> Self {
        EdgeSet {
            dim: p.dim(),
            edges: p.edges().to_vec(),
        }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec3] {
        &self.edges
    }

    /// Σ |eⱼ|².
    pub fn sum_sq_lengths(&self) -> f64 {
        self.edges.iter().map(|e| e.norm_sq()).sum()
    }

    /// ℓ = |Σ eⱼ|, the shared closure failure of every ordering.
    pub fn ell(&self) -> f64 {
        self.edges
            .iter()
            .fold(Vec3::ZERO, |acc, &e| acc + e)
            .norm()
    }

    fn check_oracle_size(&self) -> Result<()> {
        if self.n() > ORACLE_MAX_EDGES {
            return Err(Error::OracleTooLarge {
                n: self.n(),
                max: ORACLE_MAX_EDGES,
            });
        }
        Ok(())
    }

    fn check_closed(&self) -> Result<()> {
        let ell = self.ell();
        if ell > CLOSURE_TOL {
            return Err(Error::EdgeSetNotClosed { ell });
        }
        Ok(())
    }
}

/// Ensemble average of the squared k-edge chord in closed form:
///
/// ```text
/// sChord(k) = k(n−k)/(n(n−1)) · Σ|eⱼ|²  +  k(k−1)/(n(n−1)) · ℓ²
/// ```
///
/// At k = 1 this is the mean squared edgelength; at k = n it collapses to
/// ℓ².
pub fn schord_formula(es: &EdgeSet, k: usize) -> Result<f64> {
    let n = es.n();
    if k == 0 || k > n {
        return Err(Error::ChordOutOfRange { start: 0, k, n });
    }
    let (nf, kf) = (n as f64, k as f64);
    let denom = nf * (nf - 1.0);
    let ell = es.ell();
    Ok(kf * (nf - kf) / denom * es.sum_sq_lengths() + kf * (kf - 1.0) / denom * ell * ell)
}

/// The defining n!-term average (1/n!) Σ_σ |e_{σ(1)} + … + e_{σ(k)}|²,
/// evaluated literally. Independent check on [`schord_formula`]; n ≤ 8.
pub fn schord_permutation_oracle(es: &EdgeSet, k: usize) -> Result<f64> {
    let n = es.n();
    if k == 0 || k > n {
        return Err(Error::ChordOutOfRange { start: 0, k, n });
    }
    es.check_oracle_size()?;
    let mut edges = es.edges.clone();
    let mut sum = 0.0;
    let mut terms = 0u64;
    for_each_permutation(&mut edges, |perm| {
        let chord = perm[..k].iter().fold(Vec3::ZERO, |acc, &e| acc + e);
        sum += chord.norm_sq();
        terms += 1;
    });
    Ok(sum / terms as f64)
}

/// Ensemble average of the radius of gyration in closed form. Open edge
/// sets (ℓ > 0 allowed) use the n+1-vertex convention:
///
/// ```text
/// sGyradius = (n+2)/(12(n+1)) · (Σ|eⱼ|² + ℓ²)
/// ```
///
/// Closed edge sets drop the repeated vertex:
///
/// ```text
/// sGyradius = (n+1)/(12n) · Σ|eⱼ|²
/// ```
pub fn sgyradius_formula(es: &EdgeSet, closed: bool) -> Result<f64> {
    let n = es.n() as f64;
    if closed {
        es.check_closed()?;
        Ok((n + 1.0) / (12.0 * n) * es.sum_sq_lengths())
    } else {
        let ell = es.ell();
        Ok((n + 2.0) / (12.0 * (n + 1.0)) * (es.sum_sq_lengths() + ell * ell))
    }
}

/// (1/n!) Σ_σ Gyradius(e_{σ(1)}, …, e_{σ(n)}), evaluated literally over all
/// orderings; n ≤ 8.
pub fn sgyradius_permutation_oracle(es: &EdgeSet, closed: bool) -> Result<f64> {
    es.check_oracle_size()?;
    if closed {
        es.check_closed()?;
    }
    let mut edges = es.edges.clone();
    let mut sum = 0.0;
    let mut terms = 0u64;
    for_each_permutation(&mut edges, |perm| {
        sum += gyradius_of_edges(perm, closed);
        terms += 1;
    });
    Ok(sum / terms as f64)
}

/// Heap's algorithm: visit every permutation of `items` exactly once.
fn for_each_permutation<T>(items: &mut [T], mut visit: impl FnMut(&[T])) {
    let n = items.len();
    let mut c = vec![0usize; n];
    visit(items);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            visit(items);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// The regular pentagon of total length 2 (side 2/5): unit directions at
/// angles 2πj/5.
pub fn regular_pentagon_edge_set() -> EdgeSet {
    let edges = (0..5)
        .map(|j| {
            let phi = std::f64::consts::TAU * j as f64 / 5.0;
            Vec3::new(0.4 * phi.cos(), 0.4 * phi.sin(), 0.0)
        })
        .collect();
    EdgeSet::new(Dim::Two, edges).expect("pentagon edge set is valid")
}

/// An irregular closed equilateral planar 5-gon of total length 2: three
/// unit directions at mutual angle 2π/3 plus an antipodal pair, all of
/// length 2/5. Same edgelengths as the regular pentagon, different shape.
pub fn irregular_pentagon_edge_set() -> EdgeSet {
    let thirds = std::f64::consts::TAU / 3.0;
    let psi = 0.7;
    let angles = [0.0, thirds, 2.0 * thirds, psi, psi + std::f64::consts::PI];
    let edges = angles
        .iter()
        .map(|&phi| Vec3::new(0.4 * phi.cos(), 0.4 * phi.sin(), 0.0))
        .collect();
    EdgeSet::new(Dim::Two, edges).expect("irregular pentagon edge set is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::{frame_hopf, Quaternion};
    use crate::rng::RngStream;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    fn assert_rel(a: f64, b: f64, rel: f64) {
        assert!(
            (a - b).abs() <= rel * b.abs().max(f64::MIN_POSITIVE),
            "{a} vs {b} (rel {rel})"
        );
    }

    fn square() -> Polygon {
        Polygon::new(
            Dim::Two,
            true,
            vec![
                Vec3::new(0.5, 0.0, 0.0),
                Vec3::new(0.0, 0.5, 0.0),
                Vec3::new(-0.5, 0.0, 0.0),
                Vec3::new(0.0, -0.5, 0.0),
            ],
        )
        .unwrap()
    }

    /// Equilateral triangle of side 2/3.
    fn triangle() -> Polygon {
        let s = 2.0 / 3.0;
        Polygon::new(
            Dim::Two,
            true,
            vec![
                Vec3::new(s, 0.0, 0.0),
                Vec3::new(-0.5 * s, 0.75f64.sqrt() * s, 0.0),
                Vec3::new(-0.5 * s, -(0.75f64.sqrt()) * s, 0.0),
            ],
        )
        .unwrap()
    }

    fn straight_arm() -> Polygon {
        Polygon::new(
            Dim::Three,
            false,
            vec![Vec3::new(1.0, 0.0, 0.0), Vec3::new(1.0, 0.0, 0.0)],
        )
        .unwrap()
    }

    fn random_edges(rng: &mut RngStream, n: usize) -> Vec<Vec3> {
        (0..n)
            .map(|_| Vec3::new(rng.gaussian(), rng.gaussian(), rng.gaussian()))
            .collect()
    }

    /// O(n²) pairwise-sum reference for the gyradius fast path.
    fn gyradius_pairwise(p: &Polygon) -> f64 {
        let mut verts = p.vertices();
        if p.closed() {
            verts.pop();
        }
        let m = verts.len() as f64;
        let mut sum = 0.0;
        for a in &verts {
            for b in &verts {
                sum += (*a - *b).norm_sq();
            }
        }
        sum / (2.0 * m * m)
    }

    #[test]
    fn closure_defect_cases() {
        assert_eq!(closure_defect(&square()), 0.0);
        assert_close(closure_defect(&straight_arm()), 2.0, 0.0);
    }

    #[test]
    fn chord_sq_cases() {
        let sq = square();
        assert_close(chord_sq(&sq, 0, 2).unwrap(), 0.5, 1e-15);
        assert_close(chord_sq(&sq, 0, 1).unwrap(), 0.25, 1e-15);
        // full loop of any closed polygon is the squared closure defect
        for start in 0..4 {
            assert!(chord_sq(&sq, start, 4).unwrap() <= 1e-20);
        }
        assert!(chord_sq(&sq, 4, 2).is_err());
        assert!(chord_sq(&sq, 0, 5).is_err());
        let arm = straight_arm();
        assert!(chord_sq(&arm, 1, 2).is_err());
        assert_close(chord_sq(&arm, 1, 1).unwrap(), 1.0, 0.0);
    }

    #[test]
    fn full_loop_chord_equals_defect_sq() {
        let mut rng = RngStream::new(31, 0);
        for n in [3usize, 5, 8] {
            let mut edges = random_edges(&mut rng, n - 1);
            let sum = edges.iter().fold(Vec3::ZERO, |a, &e| a + e);
            edges.push(-sum);
            let p = Polygon::new(Dim::Three, true, edges).unwrap();
            let d2 = closure_defect(&p).powi(2);
            for start in 0..n {
                assert_close(chord_sq(&p, start, n).unwrap(), d2, 1e-24);
            }
        }
    }

    #[test]
    fn mean_chord_sq_cases() {
        assert_close(mean_chord_sq(&square(), 2).unwrap(), 0.5, 1e-15);
        // triangle, k = 1: all sides have squared length (2/3)²
        assert_rel(mean_chord_sq(&triangle(), 1).unwrap(), 4.0 / 9.0, 1e-14);
        // regular pentagon, k = 2: chord = side × golden ratio
        let pent = Polygon::new(Dim::Two, true, regular_pentagon_edge_set().edges().to_vec())
            .unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let expected = (0.4 * phi).powi(2);
        assert_rel(mean_chord_sq(&pent, 2).unwrap(), expected, 1e-13);
        // symmetry: every start gives the same chord
        assert_rel(chord_sq(&pent, 0, 2).unwrap(), expected, 1e-13);
        // open polygon averages the n-k+1 in-order chords
        let arm = straight_arm();
        assert_close(mean_chord_sq(&arm, 1).unwrap(), 1.0, 0.0);
        assert_close(mean_chord_sq(&arm, 2).unwrap(), 4.0, 0.0);
    }

    #[test]
    fn gyradius_cases() {
        assert_rel(gyradius(&straight_arm()), 2.0 / 3.0, 1e-15);
        assert_rel(gyradius(&triangle()), 4.0 / 27.0, 1e-14);
        // degenerate point polygon
        let point = Polygon::new(
            Dim::Three,
            false,
            vec![Vec3::ZERO, Vec3::ZERO],
        )
        .unwrap();
        assert_eq!(gyradius(&point), 0.0);
    }

    #[test]
    fn gyradius_fast_path_matches_pairwise_sum() {
        let mut rng = RngStream::new(32, 0);
        for n in [2usize, 3, 10, 57] {
            let p = Polygon::new(Dim::Three, false, random_edges(&mut rng, n)).unwrap();
            assert_rel(gyradius(&p), gyradius_pairwise(&p), 1e-12);
        }
        for n in [3usize, 10, 57] {
            let mut edges = random_edges(&mut rng, n - 1);
            let sum = edges.iter().fold(Vec3::ZERO, |a, &e| a + e);
            edges.push(-sum);
            let p = Polygon::new(Dim::Three, true, edges).unwrap();
            assert_rel(gyradius(&p), gyradius_pairwise(&p), 1e-12);
        }
    }

    #[test]
    fn total_curvature_cases() {
        use std::f64::consts::PI;
        assert_close(total_curvature(&square()).unwrap(), 2.0 * PI, 1e-12);
        assert_close(total_curvature(&triangle()).unwrap(), 2.0 * PI, 1e-12);
        assert_close(total_curvature(&straight_arm()).unwrap(), 0.0, 1e-12);
        let degenerate = Polygon::new(
            Dim::Three,
            false,
            vec![Vec3::new(1.0, 0.0, 0.0), Vec3::ZERO],
        )
        .unwrap();
        assert!(matches!(
            total_curvature(&degenerate),
            Err(Error::ZeroLengthEdge { index: 1 })
        ));
    }

    #[test]
    fn stats_invariant_under_rotation() {
        let mut rng = RngStream::new(33, 0);
        for _ in 0..20 {
            let p = Polygon::new(Dim::Three, false, random_edges(&mut rng, 12)).unwrap();
            let mut q = Quaternion::new(
                rng.gaussian(),
                rng.gaussian(),
                rng.gaussian(),
                rng.gaussian(),
            );
            let s = q.norm_sq().sqrt();
            q = Quaternion::new(q.w / s, q.x / s, q.y / s, q.z / s);
            let rot = frame_hopf(q);
            let rotated = Polygon::new(
                Dim::Three,
                false,
                p.edges().iter().map(|&e| rot.apply(e)).collect(),
            )
            .unwrap();
            assert_close(
                chord_sq(&p, 2, 5).unwrap(),
                chord_sq(&rotated, 2, 5).unwrap(),
                1e-10,
            );
            assert_close(gyradius(&p), gyradius(&rotated), 1e-10);
            assert_close(
                total_curvature(&p).unwrap(),
                total_curvature(&rotated).unwrap(),
                1e-10,
            );
        }
    }

    #[test]
    fn schord_formula_cases() {
        // five closed edges of length 2/5, k = 2
        let pent = regular_pentagon_edge_set();
        assert_close(schord_formula(&pent, 2).unwrap(), 6.0 / 25.0, 1e-15);
        // k = n reduces to ell², k = 1 to the mean squared edgelength
        let mut rng = RngStream::new(34, 0);
        let es = EdgeSet::new(Dim::Three, random_edges(&mut rng, 6)).unwrap();
        let ell2 = es.ell().powi(2);
        assert_rel(schord_formula(&es, 6).unwrap(), ell2, 1e-12);
        assert_rel(
            schord_formula(&es, 1).unwrap(),
            es.sum_sq_lengths() / 6.0,
            1e-12,
        );
        let sq = EdgeSet::from_polygon(&square());
        assert_close(schord_formula(&sq, 1).unwrap(), 0.25, 1e-15);
        assert!(schord_formula(&sq, 0).is_err());
        assert!(schord_formula(&sq, 5).is_err());
    }

    #[test]
    fn schord_oracle_matches_formula_and_pinned_values() {
        let pent = regular_pentagon_edge_set();
        let irr = irregular_pentagon_edge_set();
        assert!(pent.ell() <= 1e-15 && irr.ell() <= 1e-15);
        assert_close(schord_permutation_oracle(&pent, 2).unwrap(), 6.0 / 25.0, 1e-13);
        assert_close(schord_permutation_oracle(&irr, 2).unwrap(), 6.0 / 25.0, 1e-13);

        let mut rng = RngStream::new(35, 0);
        let es = EdgeSet::new(Dim::Three, random_edges(&mut rng, 3)).unwrap();
        assert!(es.ell() > 0.0);
        for k in 1..=3 {
            assert_rel(
                schord_permutation_oracle(&es, k).unwrap(),
                schord_formula(&es, k).unwrap(),
                1e-12,
            );
        }

        let big = EdgeSet::new(Dim::Three, random_edges(&mut rng, 9)).unwrap();
        assert!(matches!(
            schord_permutation_oracle(&big, 2),
            Err(Error::OracleTooLarge { n: 9, .. })
        ));
    }

    #[test]
    fn sgyradius_formula_cases() {
        let tri = EdgeSet::from_polygon(&triangle());
        assert_rel(sgyradius_formula(&tri, true).unwrap(), 4.0 / 27.0, 1e-14);
        let arm = EdgeSet::from_polygon(&straight_arm());
        assert_rel(sgyradius_formula(&arm, false).unwrap(), 2.0 / 3.0, 1e-14);
        let sq = EdgeSet::from_polygon(&square());
        assert_rel(sgyradius_formula(&sq, true).unwrap(), 5.0 / 48.0, 1e-14);
        // open edge set flagged closed is refused
        assert!(matches!(
            sgyradius_formula(&arm, true),
            Err(Error::EdgeSetNotClosed { .. })
        ));
    }

    #[test]
    fn sgyradius_oracle_matches_formula() {
        let tri = EdgeSet::from_polygon(&triangle());
        assert_rel(
            sgyradius_permutation_oracle(&tri, true).unwrap(),
            4.0 / 27.0,
            1e-13,
        );
        let arm = EdgeSet::from_polygon(&straight_arm());
        assert_rel(
            sgyradius_permutation_oracle(&arm, false).unwrap(),
            2.0 / 3.0,
            1e-13,
        );
        let sq = EdgeSet::from_polygon(&square());
        assert_rel(
            sgyradius_permutation_oracle(&sq, true).unwrap(),
            5.0 / 48.0,
            1e-13,
        );
    }

    #[test]
    fn sgyradius_formula_is_chord_weighted_sum_for_open_sets() {
        let mut rng = RngStream::new(36, 0);
        for n in 2..=7usize {
            let es = EdgeSet::new(Dim::Three, random_edges(&mut rng, n)).unwrap();
            let m = n as f64;
            let weighted: f64 = (1..=n)
                .map(|k| {
                    (m + 1.0 - k as f64) / (m + 1.0).powi(2) * schord_formula(&es, k).unwrap()
                })
                .sum();
            assert_rel(sgyradius_formula(&es, false).unwrap(), weighted, 1e-12);
        }
    }

    #[test]
    fn project_to_plane_cases() {
        // planar polygon living in the xy-plane of 3-space
        let flat = Polygon::new(
            Dim::Three,
            true,
            square().edges().to_vec(),
        )
        .unwrap();
        let proj = project_to_plane(&flat, Vec3::new(0.0, 0.0, 2.0)).unwrap();
        assert_eq!(proj.dim(), Dim::Two);
        assert!(proj.closed());
        assert_close(proj.total_length(), 2.0, 1e-14);
        assert_close(gyradius(&proj), gyradius(&flat), 1e-14);

        // normal lying in the polygon's plane, perpendicular to one edge:
        // that edge keeps its full length
        let proj2 = project_to_plane(&flat, Vec3::new(0.0, 1.0, 0.0)).unwrap();
        assert_close(proj2.edges()[0].norm(), 0.5, 1e-14);

        assert!(matches!(
            project_to_plane(&flat, Vec3::ZERO),
            Err(Error::ZeroNormal)
        ));
        assert!(matches!(
            project_to_plane(&square(), Vec3::new(0.0, 0.0, 1.0)),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn rescale_cases() {
        let tri = triangle();
        let same = rescale_to_length(&tri, tri.total_length()).unwrap();
        for (a, b) in same.edges().iter().zip(tri.edges()) {
            assert_close(a.x, b.x, 1e-15);
            assert_close(a.y, b.y, 1e-15);
        }
        let doubled = rescale_to_length(&tri, 4.0).unwrap();
        assert_rel(gyradius(&doubled), 4.0 * gyradius(&tri), 1e-12);
        let point = Polygon::new(Dim::Two, false, vec![Vec3::ZERO, Vec3::ZERO]).unwrap();
        assert!(matches!(
            rescale_to_length(&point, 2.0),
            Err(Error::ZeroTotalLength)
        ));
        assert!(rescale_to_length(&tri, 0.0).is_err());
    }

    #[test]
    fn permutation_enumeration_is_complete() {
        let mut items = [0usize, 1, 2, 3];
        let mut seen = std::collections::HashSet::new();
        for_each_permutation(&mut items, |p| {
            seen.insert(p.to_vec());
        });
        assert_eq!(seen.len(), 24);
    }
}
