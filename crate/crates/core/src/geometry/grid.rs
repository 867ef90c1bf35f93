//! Rectangular lattice over a box domain with boundary classification.

use crate::{Error, Result};

/// One of the (up to six) faces of the box domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Face {
    XLo,
    XHi,
    YLo,
    YHi,
    ZLo,
    ZHi,
}

impl Face {
    /// All faces meaningful for dimension `dim`.
    pub fn all(dim: usize) -> &'static [Face] {
        match dim {
            2 => &[Face::XLo, Face::XHi, Face::YLo, Face::YHi],
            _ => &[
                Face::XLo,
                Face::XHi,
                Face::YLo,
                Face::YHi,
                Face::ZLo,
                Face::ZHi,
            ],
        }
    }

    /// Axis this face is orthogonal to (0, 1 or 2).
    pub fn axis(&self) -> usize {
        match self {
            Face::XLo | Face::XHi => 0,
            Face::YLo | Face::YHi => 1,
            Face::ZLo | Face::ZHi => 2,
        }
    }

    /// True for the high-coordinate face of its axis.
    pub fn is_high(&self) -> bool {
        matches!(self, Face::XHi | Face::YHi | Face::ZHi)
    }

    /// Outward unit normal (Euclidean).
    pub fn normal(&self) -> [f64; 3] {
        let mut nu = [0.0; 3];
        nu[self.axis()] = if self.is_high() { 1.0 } else { -1.0 };
        nu
    }

    pub fn parse(s: &str) -> Option<Face> {
        match s {
            "x0" | "xlo" => Some(Face::XLo),
            "x1" | "xhi" => Some(Face::XHi),
            "y0" | "ylo" => Some(Face::YLo),
            "y1" | "yhi" => Some(Face::YHi),
            "z0" | "zlo" => Some(Face::ZLo),
            "z1" | "zhi" => Some(Face::ZHi),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Face::XLo => "x0",
            Face::XHi => "x1",
            Face::YLo => "y0",
            Face::YHi => "y1",
            Face::ZLo => "z0",
            Face::ZHi => "z1",
        }
    }
}

/// Sub-rectangle of a face, in the in-face coordinates (the non-axis
/// coordinates in ascending axis order). `None` selects the whole face.
#[derive(Debug, Clone, Copy)]
pub struct FaceRange {
    pub lo: [f64; 2],
    pub hi: [f64; 2],
}

/// One selected portion of the accessible boundary.
#[derive(Debug, Clone, Copy)]
pub struct FaceSelection {
    pub face: Face,
    pub range: Option<FaceRange>,
}

/// Specification of the accessible boundary portion.
#[derive(Debug, Clone)]
pub struct GammaSpec {
    pub selections: Vec<FaceSelection>,
}

impl GammaSpec {
    /// The entire boundary is accessible.
    pub fn full_boundary(dim: usize) -> Self {
        GammaSpec {
            selections: Face::all(dim)
                .iter()
                .map(|&face| FaceSelection { face, range: None })
                .collect(),
        }
    }

    /// Whole faces, no sub-ranges.
    pub fn faces(faces: &[Face]) -> Self {
        GammaSpec {
            selections: faces
                .iter()
                .map(|&face| FaceSelection { face, range: None })
                .collect(),
        }
    }

    /// True if the point `p` lying on `face` belongs to the selection.
    pub fn contains(&self, face: Face, p: [f64; 3]) -> bool {
        for sel in &self.selections {
            if sel.face != face {
                continue;
            }
            match sel.range {
                None => return true,
                Some(r) => {
                    let t = in_face_coords(face, p);
                    let hit = (0..2).all(|d| t[d] >= r.lo[d] - 1e-12 && t[d] <= r.hi[d] + 1e-12);
                    if hit {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// In-face coordinates: the non-axis components of `p` in ascending axis order.
pub fn in_face_coords(face: Face, p: [f64; 3]) -> [f64; 2] {
    match face.axis() {
        0 => [p[1], p[2]],
        1 => [p[0], p[2]],
        _ => [p[0], p[1]],
    }
}

/// Classification of a grid node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NodeClass {
    Interior,
    /// Boundary node in the interior of a single face. `gamma` marks
    /// membership in the accessible boundary.
    Boundary { face: Face, gamma: bool },
    /// Node on an edge or corner of the box (two or more extreme indices).
    /// Always carries homogeneous Dirichlet data and never belongs to the
    /// accessible boundary.
    Ridge,
}

/// Rectangular lattice covering a box `[0, L1] x ... x [0, Ln]`.
///
/// Node `(i, j, k)` sits at `(i*h1, j*h2, k*h3)`; storage is row-major with
/// the last axis fastest. For 2-d grids the z axis degenerates to a single
/// layer and is ignored everywhere.
#[derive(Debug, Clone)]
pub struct Grid {
    dim: usize,
    counts: [usize; 3],
    spacing: [f64; 3],
    extents: [f64; 3],
    gamma_spec: GammaSpec,
    class: Vec<NodeClass>,
    interior: Vec<usize>,
    boundary: Vec<usize>,
    gamma: Vec<usize>,
    /// node id -> index into `interior`, or `u32::MAX`.
    interior_index: Vec<u32>,
    /// node id -> index into `boundary`, or `u32::MAX`.
    boundary_index: Vec<u32>,
    /// node id -> index into `gamma`, or `u32::MAX`.
    gamma_index: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl Grid {
    pub fn new_2d(extents: [f64; 2], counts: [usize; 2], gamma: GammaSpec) -> Result<Grid> {
        Self::build(
            2,
            [extents[0], extents[1], 0.0],
            [counts[0], counts[1], 1],
            gamma,
        )
    }

    pub fn new_3d(extents: [f64; 3], counts: [usize; 3], gamma: GammaSpec) -> Result<Grid> {
        Self::build(3, extents, counts, gamma)
    }

    fn build(dim: usize, extents: [f64; 3], counts: [usize; 3], gamma: GammaSpec) -> Result<Grid> {
        for d in 0..dim {
            if counts[d] < 8 {
                return Err(Error::Grid(format!(
                    "axis {d} has {} nodes; at least 8 required",
                    counts[d]
                )));
            }
            if !(extents[d] > 0.0) {
                return Err(Error::Grid(format!(
                    "axis {d} extent must be positive, got {}",
                    extents[d]
                )));
            }
        }
        for sel in &gamma.selections {
            if sel.face.axis() >= dim {
                return Err(Error::Grid(format!(
                    "control face {} does not exist on a {dim}-d grid",
                    sel.face.name()
                )));
            }
        }
        let mut spacing = [1.0; 3];
        for d in 0..dim {
            spacing[d] = extents[d] / (counts[d] - 1) as f64;
        }

        let total = counts[0] * counts[1] * counts[2];
        let mut class = vec![NodeClass::Interior; total];
        let mut interior = Vec::new();
        let mut boundary = Vec::new();
        let mut gamma_ids = Vec::new();
        let mut interior_index = vec![NONE; total];
        let mut boundary_index = vec![NONE; total];
        let mut gamma_index = vec![NONE; total];

        for node in 0..total {
            let idx = decompose(node, counts);
            let mut extreme_axes = Vec::new();
            for d in 0..dim {
                if idx[d] == 0 || idx[d] == counts[d] - 1 {
                    extreme_axes.push(d);
                }
            }
            let c = match extreme_axes.len() {
                0 => {
                    interior_index[node] = interior.len() as u32;
                    interior.push(node);
                    NodeClass::Interior
                }
                1 => {
                    let d = extreme_axes[0];
                    let face = face_of(d, idx[d] == counts[d] - 1);
                    let p = coords_of(idx, spacing);
                    let in_gamma = gamma.contains(face, p);
                    boundary_index[node] = boundary.len() as u32;
                    boundary.push(node);
                    if in_gamma {
                        gamma_index[node] = gamma_ids.len() as u32;
                        gamma_ids.push(node);
                    }
                    NodeClass::Boundary {
                        face,
                        gamma: in_gamma,
                    }
                }
                _ => {
                    boundary_index[node] = boundary.len() as u32;
                    boundary.push(node);
                    NodeClass::Ridge
                }
            };
            class[node] = c;
        }

        let grid = Grid {
            dim,
            counts,
            spacing,
            extents,
            gamma_spec: gamma,
            class,
            interior,
            boundary,
            gamma: gamma_ids,
            interior_index,
            boundary_index,
            gamma_index,
        };
        grid.check_gamma_connected()?;
        Ok(grid)
    }

    /// The accessible boundary must be nonempty and edge-connected. Face
    /// nodes on different faces count as connected when they share a ridge
    /// node, so a control region wrapping around edges of the box is a
    /// single component.
    fn check_gamma_connected(&self) -> Result<()> {
        if self.gamma.is_empty() {
            return Err(Error::Grid(
                "accessible boundary is empty; select at least one face".into(),
            ));
        }
        let mut visited = vec![false; self.node_count()];
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(self.gamma[0]);
        visited[self.gamma[0]] = true;
        while let Some(node) = queue.pop_front() {
            let pass_through = matches!(self.class[node], NodeClass::Ridge);
            let is_gamma = self.gamma_index[node] != NONE;
            if !pass_through && !is_gamma {
                continue;
            }
            let idx = decompose(node, self.counts);
            for d in 0..self.dim {
                for step in [-1isize, 1] {
                    let ni = idx[d] as isize + step;
                    if ni < 0 || ni >= self.counts[d] as isize {
                        continue;
                    }
                    let mut nidx = idx;
                    nidx[d] = ni as usize;
                    let nb = compose(nidx, self.counts);
                    let nb_ok = self.gamma_index[nb] != NONE
                        || matches!(self.class[nb], NodeClass::Ridge);
                    if nb_ok && !visited[nb] {
                        visited[nb] = true;
                        queue.push_back(nb);
                    }
                }
            }
        }
        let unreached = self.gamma.iter().filter(|&&g| !visited[g]).count();
        if unreached > 0 {
            return Err(Error::Grid(format!(
                "accessible boundary is not edge-connected ({unreached} of {} nodes unreachable)",
                self.gamma.len()
            )));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn counts(&self) -> [usize; 3] {
        self.counts
    }

    pub fn spacing(&self) -> [f64; 3] {
        self.spacing
    }

    pub fn extents(&self) -> [f64; 3] {
        self.extents
    }

    pub fn gamma_spec(&self) -> &GammaSpec {
        &self.gamma_spec
    }

    /// Cell volume `h1*...*hn`.
    pub fn cell_volume(&self) -> f64 {
        (0..self.dim).map(|d| self.spacing[d]).product()
    }

    /// Length of the longest box diagonal.
    pub fn diameter(&self) -> f64 {
        (0..self.dim)
            .map(|d| self.extents[d] * self.extents[d])
            .sum::<f64>()
            .sqrt()
    }

    pub fn node_count(&self) -> usize {
        self.counts[0] * self.counts[1] * self.counts[2]
    }

    pub fn node_id(&self, idx: [usize; 3]) -> usize {
        compose(idx, self.counts)
    }

    pub fn node_index(&self, node: usize) -> [usize; 3] {
        decompose(node, self.counts)
    }

    pub fn coords(&self, node: usize) -> [f64; 3] {
        coords_of(decompose(node, self.counts), self.spacing)
    }

    pub fn class(&self, node: usize) -> NodeClass {
        self.class[node]
    }

    pub fn is_interior(&self, node: usize) -> bool {
        self.interior_index[node] != NONE
    }

    pub fn interior_nodes(&self) -> &[usize] {
        &self.interior
    }

    pub fn boundary_nodes(&self) -> &[usize] {
        &self.boundary
    }

    pub fn gamma_nodes(&self) -> &[usize] {
        &self.gamma
    }

    pub fn interior_of(&self, node: usize) -> Option<usize> {
        let i = self.interior_index[node];
        (i != NONE).then_some(i as usize)
    }

    pub fn boundary_of(&self, node: usize) -> Option<usize> {
        let i = self.boundary_index[node];
        (i != NONE).then_some(i as usize)
    }

    pub fn gamma_of(&self, node: usize) -> Option<usize> {
        let i = self.gamma_index[node];
        (i != NONE).then_some(i as usize)
    }

    /// Outward unit Euclidean normal of a boundary node. Ridge nodes get the
    /// normalized diagonal of their extreme axes.
    pub fn normal(&self, node: usize) -> Option<[f64; 3]> {
        match self.class[node] {
            NodeClass::Interior => None,
            NodeClass::Boundary { face, .. } => Some(face.normal()),
            NodeClass::Ridge => {
                let idx = decompose(node, self.counts);
                let mut nu = [0.0; 3];
                for d in 0..self.dim {
                    if idx[d] == 0 {
                        nu[d] = -1.0;
                    } else if idx[d] == self.counts[d] - 1 {
                        nu[d] = 1.0;
                    }
                }
                let len = nu.iter().map(|v| v * v).sum::<f64>().sqrt();
                for v in &mut nu {
                    *v /= len;
                }
                Some(nu)
            }
        }
    }

    /// Neighbor node along `axis` (+1 or -1 step), if inside the lattice.
    pub fn neighbor(&self, node: usize, axis: usize, step: isize) -> Option<usize> {
        let idx = decompose(node, self.counts);
        let ni = idx[axis] as isize + step;
        if ni < 0 || ni >= self.counts[axis] as isize {
            return None;
        }
        let mut nidx = idx;
        nidx[axis] = ni as usize;
        Some(compose(nidx, self.counts))
    }

    /// Trapezoidal quadrature factor of a node (product over axes of 1/2 at
    /// extreme indices).
    pub fn trapezoid_factor(&self, node: usize) -> f64 {
        let idx = decompose(node, self.counts);
        let mut w = 1.0;
        for d in 0..self.dim {
            if idx[d] == 0 || idx[d] == self.counts[d] - 1 {
                w *= 0.5;
            }
        }
        w
    }

    /// Quadrature weight of a face node for integrals over the accessible
    /// boundary: the product of tangential spacings (Euclidean surface
    /// measure of the node's face cell).
    pub fn face_measure(&self, node: usize) -> f64 {
        match self.class[node] {
            NodeClass::Boundary { face, .. } => {
                let mut m = 1.0;
                for d in 0..self.dim {
                    if d != face.axis() {
                        m *= self.spacing[d];
                    }
                }
                m
            }
            _ => 0.0,
        }
    }

    /// True if the point lies inside the open box.
    pub fn contains_point(&self, p: [f64; 3]) -> bool {
        (0..self.dim).all(|d| p[d] > 0.0 && p[d] < self.extents[d])
    }
}

fn face_of(axis: usize, high: bool) -> Face {
    match (axis, high) {
        (0, false) => Face::XLo,
        (0, true) => Face::XHi,
        (1, false) => Face::YLo,
        (1, true) => Face::YHi,
        (2, false) => Face::ZLo,
        _ => Face::ZHi,
    }
}

fn decompose(node: usize, counts: [usize; 3]) -> [usize; 3] {
    let k = node % counts[2];
    let rest = node / counts[2];
    let j = rest % counts[1];
    let i = rest / counts[1];
    [i, j, k]
}

fn compose(idx: [usize; 3], counts: [usize; 3]) -> usize {
    (idx[0] * counts[1] + idx[1]) * counts[2] + idx[2]
}

fn coords_of(idx: [usize; 3], spacing: [f64; 3]) -> [f64; 3] {
    [
        idx[0] as f64 * spacing[0],
        idx[1] as f64 * spacing[1],
        idx[2] as f64 * spacing[2],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classifies_square_boundary() {
        let g = Grid::new_2d([1.0, 1.0], [9, 9], GammaSpec::full_boundary(2)).unwrap();
        assert_eq!(g.interior_nodes().len(), 49);
        assert_eq!(g.boundary_nodes().len(), 32);
        // corners excluded from the accessible set
        assert_eq!(g.gamma_nodes().len(), 28);
        let corner = g.node_id([0, 0, 0]);
        assert_eq!(g.class(corner), NodeClass::Ridge);
        let nu = g.normal(corner).unwrap();
        let len: f64 = nu.iter().map(|v| v * v).sum::<f64>();
        assert!((len - 1.0).abs() < 1e-14);
    }

    #[test]
    fn single_face_gamma() {
        let g = Grid::new_2d([1.0, 1.0], [9, 9], GammaSpec::faces(&[Face::XHi])).unwrap();
        assert_eq!(g.gamma_nodes().len(), 7);
        for &node in g.gamma_nodes() {
            let nu = g.normal(node).unwrap();
            assert_eq!(nu, [1.0, 0.0, 0.0]);
        }
    }

    #[test]
    fn rejects_disconnected_gamma() {
        let err = Grid::new_2d(
            [1.0, 1.0],
            [9, 9],
            GammaSpec::faces(&[Face::XLo, Face::XHi]),
        );
        assert!(err.is_err());
        // adjacent faces connect through the shared corner
        assert!(Grid::new_2d(
            [1.0, 1.0],
            [9, 9],
            GammaSpec::faces(&[Face::XLo, Face::YLo]),
        )
        .is_ok());
    }

    #[test]
    fn rejects_coarse_grid() {
        assert!(Grid::new_2d([1.0, 1.0], [7, 9], GammaSpec::full_boundary(2)).is_err());
    }

    #[test]
    fn cube_counts() {
        let g = Grid::new_3d([1.0, 1.0, 1.0], [8, 8, 8], GammaSpec::full_boundary(3)).unwrap();
        assert_eq!(g.interior_nodes().len(), 6 * 6 * 6);
        assert_eq!(g.gamma_nodes().len(), 6 * 36);
        assert!((g.diameter() - 3f64.sqrt()).abs() < 1e-14);
    }
}
