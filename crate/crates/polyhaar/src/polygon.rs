//! The polygon type: an ordered list of edge vectors up to translation.

use crate::quat::Vec3;
use crate::{Error, Result};

/// Closure tolerance for polygons flagged closed: |Σ eᵢ| must not exceed
/// this when a closed polygon is built from external data.
pub const CLOSURE_TOL: f64 = 1e-10;

/// Ambient dimension of a polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dim {
    Two,
    Three,
}

impl Dim {
    pub fn as_usize(self) -> usize {
        match self {
            Dim::Two => 2,
            Dim::Three => 3,
        }
    }
}

impl std::fmt::Display for Dim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_usize())
    }
}

/// An n-edge polygon stored as edge vectors (translation already quotiented
/// out). Planar polygons keep `z = 0` on every edge and use (x, y) as their
/// 2D coordinates.
///
/// Sampled polygons have total length 2 by construction; derived polygons
/// (projections, rescalings) may not, so total length is a sampler contract
/// rather than a type invariant.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    dim: Dim,
    closed: bool,
    edges: Vec<Vec3>,
}

impl Polygon {
    /// Validating constructor for externally supplied edges.
    pub fn new(dim: Dim, closed: bool, edges: Vec<Vec3>) -> Result<Self> {
        let min = if closed { 3 } else { 2 };
        if edges.len() < min {
            let kind = if closed { "closed polygon" } else { "polygonal arm" };
            return Err(Error::TooFewEdges {
                kind,
                min,
                n: edges.len(),
            });
        }
        if edges.iter().any(|e| !e.is_finite()) {
            return Err(Error::NonFinite);
        }
        if dim == Dim::Two && edges.iter().any(|e| e.z != 0.0) {
            return Err(Error::NotPlanar);
        }
        let poly = Polygon { dim, closed, edges };
        if closed {
            let defect = poly.closure_defect();
            if defect > CLOSURE_TOL {
                return Err(Error::NotClosed {
                    defect,
                    tol: CLOSURE_TOL,
                });
            }
        }
        Ok(poly)
    }

    /// Constructor for edges produced inside the crate, where the invariants
    /// hold by construction (samplers) or are inherited (projection and
    /// rescaling of an already-valid polygon).
    pub(crate) fn new_unchecked(dim: Dim, closed: bool, edges: Vec<Vec3>) -> Self {
        debug_assert!(edges.len() >= if closed { 3 } else { 2 });
        debug_assert!(dim == Dim::Three || edges.iter().all(|e| e.z == 0.0));
        Polygon { dim, closed, edges }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn closed(&self) -> bool {
        self.closed
    }

    /// Number of edges.
    pub fn n(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec3] {
        &self.edges
    }

    pub fn total_length(&self) -> f64 {
        self.edges.iter().map(|e| e.norm()).sum()
    }

    /// |Σ eᵢ|: zero exactly for closed polygons.
    pub fn closure_defect(&self) -> f64 {
        self.edge_sum().norm()
    }

    pub fn edge_sum(&self) -> Vec3 {
        self.edges.iter().fold(Vec3::ZERO, |acc, &e| acc + e)
    }

    pub fn max_edge_length(&self) -> f64 {
        self.edges.iter().map(|e| e.norm()).fold(0.0, f64::max)
    }

    /// Vertices v₁ = origin, vᵢ₊₁ = vᵢ + eᵢ (n+1 entries; for closed
    /// polygons the last repeats the origin up to the closure defect).
    pub fn vertices(&self) -> Vec<Vec3> {
        let mut vs = Vec::with_capacity(self.edges.len() + 1);
        let mut v = Vec3::ZERO;
        vs.push(v);
        for &e in &self.edges {
            v += e;
            vs.push(v);
        }
        vs
    }
}
