//! The eight polygon-space families.

use crate::polygon::Dim;

/// Which measure/formula family a polygon ensemble belongs to.
///
/// `Arm` spaces hold open chains, `Pol` spaces closed polygons; the prefix
/// `E` marks the equilateral restriction (all edges of length 2/n). The
/// non-equilateral spaces carry the symmetric measure pushed forward from
/// their model spheres and Stiefel manifolds; the equilateral arm spaces
/// carry the product measure on round spheres.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    Arm2,
    Arm3,
    Pol2,
    Pol3,
    EArm2,
    EArm3,
    EPol2,
    EPol3,
}

impl SpaceKind {
    pub const ALL: [SpaceKind; 8] = [
        SpaceKind::Arm2,
        SpaceKind::Arm3,
        SpaceKind::Pol2,
        SpaceKind::Pol3,
        SpaceKind::EArm2,
        SpaceKind::EArm3,
        SpaceKind::EPol2,
        SpaceKind::EPol3,
    ];

    /// The four spaces with a direct Haar-measure sampler.
    pub const SYMMETRIC: [SpaceKind; 4] = [
        SpaceKind::Arm2,
        SpaceKind::Arm3,
        SpaceKind::Pol2,
        SpaceKind::Pol3,
    ];

    pub fn dim(self) -> Dim {
        match self {
            SpaceKind::Arm2 | SpaceKind::Pol2 | SpaceKind::EArm2 | SpaceKind::EPol2 => Dim::Two,
            SpaceKind::Arm3 | SpaceKind::Pol3 | SpaceKind::EArm3 | SpaceKind::EPol3 => Dim::Three,
        }
    }

    pub fn closed(self) -> bool {
        matches!(
            self,
            SpaceKind::Pol2 | SpaceKind::Pol3 | SpaceKind::EPol2 | SpaceKind::EPol3
        )
    }

    pub fn equilateral(self) -> bool {
        matches!(
            self,
            SpaceKind::EArm2 | SpaceKind::EArm3 | SpaceKind::EPol2 | SpaceKind::EPol3
        )
    }

    /// Minimum edge count: 2 for arms, 3 for closed polygons (a closed
    /// 2-gon degenerates to a doubly covered segment and is rejected).
    pub fn min_edges(self) -> usize {
        if self.closed() {
            3
        } else {
            2
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SpaceKind::Arm2 => "arm2",
            SpaceKind::Arm3 => "arm3",
            SpaceKind::Pol2 => "pol2",
            SpaceKind::Pol3 => "pol3",
            SpaceKind::EArm2 => "earm2",
            SpaceKind::EArm3 => "earm3",
            SpaceKind::EPol2 => "epol2",
            SpaceKind::EPol3 => "epol3",
        }
    }
}

impl std::fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for SpaceKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SpaceKind::ALL
            .into_iter()
            .find(|k| k.label() == s.to_ascii_lowercase())
            .ok_or_else(|| crate::Error::invalid(format!("unknown space `{s}`")))
    }
}
