//! Smooth-knot quantities read off a diagram: Seifert-circle genus bound,
//! signature and determinant.
//!
//! Signature uses a checkerboard surface: with the Goeritz matrix `G` of the
//! unshaded regions, `sigma = sign(G) - mu`, where `mu` sums the crossing
//! indices over crossings whose oriented smoothing joins the shaded
//! corners. The right-handed trefoil comes out at `-2`.

use crate::diagram::Diagram;
use crate::matrix::{abs_det_i64, SymmetricIntMatrix};
use crate::pd::PDCode;

/// `(crossings - seifert_circles + 1) / 2`.
pub fn seifert_genus_upper(pd: &PDCode) -> i64 {
    let d = pd.to_diagram();
    let n = d.crossing_count();
    if n == 0 {
        return 0;
    }
    let circles = seifert_circles(&d);
    (n as i64 - circles as i64 + 1) / 2
}

pub(crate) fn seifert_circles(d: &Diagram) -> usize {
    let all: Vec<(usize, [u8; 4])> = (0..d.crossing_count()).map(|c| (c, oriented_pairing(d, c))).collect();
    d.remove_crossings(&all).free_loops()
}

fn oriented_pairing(d: &Diagram, c: usize) -> [u8; 4] {
    let mut p = [0u8; 4];
    let slot = |over: bool, outgoing: bool| {
        (0..4u8).find(|&s| d.is_over((c, s)) == over && d.is_outgoing((c, s)) == outgoing).unwrap()
    };
    let (ui, uo, oi, oo) = (slot(false, false), slot(false, true), slot(true, false), slot(true, true));
    for (x, y) in [(ui, oo), (oi, uo)] {
        p[x as usize] = y;
        p[y as usize] = x;
    }
    p
}

/// Checkerboard data: face index of each corner and a 2-colouring of faces.
struct Checkerboard {
    corner_face: Vec<[usize; 4]>,
    colour: Vec<u8>,
}

fn checkerboard(d: &Diagram) -> Checkerboard {
    let faces = d.faces();
    let mut corner_face = vec![[usize::MAX; 4]; d.crossing_count()];
    for (f, face) in faces.iter().enumerate() {
        for &(c, k) in face {
            corner_face[c][k as usize] = f;
        }
    }
    let mut colour = vec![u8::MAX; faces.len()];
    colour[corner_face[0][0]] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for row in &corner_face {
            for k in 0..4 {
                let (a, b) = (row[k], row[(k + 1) % 4]);
                if colour[a] != u8::MAX && colour[b] == u8::MAX {
                    colour[b] = 1 - colour[a];
                    changed = true;
                } else if colour[b] != u8::MAX && colour[a] == u8::MAX {
                    colour[a] = 1 - colour[b];
                    changed = true;
                }
            }
        }
    }
    Checkerboard { corner_face, colour }
}

/// Reduced Goeritz matrix of the faces coloured `white`, and the correction
/// term `mu`.
fn goeritz(d: &Diagram, white: u8) -> (SymmetricIntMatrix, i64) {
    let cb = checkerboard(d);
    let white_faces: Vec<usize> = (0..cb.colour.len()).filter(|&f| cb.colour[f] == white).collect();
    let mut index = vec![usize::MAX; cb.colour.len()];
    for (i, &f) in white_faces.iter().enumerate() {
        index[f] = i;
    }
    let mut g = SymmetricIntMatrix::zeros(white_faces.len());
    let mut mu = 0;
    for c in 0..d.crossing_count() {
        let k0 = (0..4).find(|&k| cb.colour[cb.corner_face[c][k]] == white).unwrap();
        let (r1, r2) = (index[cb.corner_face[c][k0]], index[cb.corner_face[c][k0 + 2]]);
        // Index of the crossing: -1 when the over strand bounds the white
        // corner k0 on its clockwise side.
        let eta: i64 = if d.is_over((c, k0 as u8)) { -1 } else { 1 };
        if r1 != r2 {
            g.add_sym(r1, r2, -eta);
            g.add_sym(r1, r1, eta);
            g.add_sym(r2, r2, eta);
        }
        // The oriented smoothing cuts off the corner between u_in and o_out.
        let pairing = oriented_pairing(d, c);
        let cut = (0..4).find(|&k| pairing[k] as usize == (k + 1) % 4).unwrap();
        let merged_shaded = cb.colour[cb.corner_face[c][(cut + 1) % 4]] != white;
        if merged_shaded {
            mu += eta;
        }
    }
    let reduced = if white_faces.is_empty() { g } else { g.minor(0) };
    (reduced, mu)
}

/// Knot signature; the right-handed trefoil has signature -2.
pub fn signature(pd: &PDCode) -> i64 {
    diagram_signature(&pd.to_diagram())
}

pub(crate) fn diagram_signature(d: &Diagram) -> i64 {
    if d.crossing_count() == 0 {
        return 0;
    }
    let (g, mu) = goeritz(d, 0);
    g.signature() - mu
}

/// `|det K|`.
pub fn determinant(pd: &PDCode) -> i64 {
    diagram_determinant(&pd.to_diagram())
}

pub(crate) fn diagram_determinant(d: &Diagram) -> i64 {
    if d.crossing_count() == 0 {
        return 1;
    }
    let (g, _) = goeritz(d, 0);
    abs_det_i64(&g.determinant())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::pd::mirror;

    pub(crate) fn pd(s: &str) -> PDCode {
        s.parse().unwrap()
    }

    pub(crate) const TREFOIL: &str = "PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]";
    pub(crate) const FIGURE_EIGHT: &str = "PD[X(4,2,5,1), X(8,6,1,5), X(6,3,7,4), X(2,7,3,8)]";
    pub(crate) const CINQUEFOIL: &str = "PD[X(2,8,3,7), X(4,10,5,9), X(6,2,7,1), X(8,4,9,3), X(10,6,1,5)]";
    pub(crate) const K10_139: &str = "PD[X(1,11,2,10), X(4,18,5,17), X(5,13,6,12), X(7,15,8,14), X(9,1,10,20), \
X(11,3,12,2), X(13,7,14,6), X(16,4,17,3), X(18,16,19,15), X(19,9,20,8)]";
    pub(crate) const K10_145: &str = "PD[X(1,14,2,15), X(3,18,4,19), X(6,13,7,14), X(8,6,9,5), X(9,16,10,17), \
X(11,2,12,3), X(12,7,13,8), X(15,20,16,1), X(17,4,18,5), X(19,10,20,11)]";

    #[test]
    fn both_colourings_agree() {
        for s in [TREFOIL, FIGURE_EIGHT, CINQUEFOIL, K10_139, K10_145] {
            let d = pd(s).to_diagram();
            for k in [d.clone(), mirror(&pd(s)).to_diagram()] {
                let (g0, mu0) = goeritz(&k, 0);
                let (g1, mu1) = goeritz(&k, 1);
                assert_eq!(g0.signature() - mu0, g1.signature() - mu1, "{s}");
                assert_eq!(abs_det_i64(&g0.determinant()), abs_det_i64(&g1.determinant()), "{s}");
            }
        }
    }

    #[test]
    fn reference_signatures() {
        for (s, sigma, det) in
            [(TREFOIL, -2, 3), (FIGURE_EIGHT, 0, 5), (CINQUEFOIL, -4, 5), (K10_139, -6, 3), (K10_145, 2, 3)]
        {
            assert_eq!(signature(&pd(s)), sigma, "{s}");
            assert_eq!(signature(&mirror(&pd(s))), -sigma, "{s}");
            assert_eq!(determinant(&pd(s)), det, "{s}");
        }
    }

    #[test]
    fn genus_bounds() {
        assert_eq!(seifert_genus_upper(&PDCode::unknot()), 0);
        assert_eq!(seifert_genus_upper(&pd(TREFOIL)), 1);
        assert_eq!(seifert_genus_upper(&pd(CINQUEFOIL)), 2);
        assert_eq!(seifert_genus_upper(&pd("PD[X(1,1,2,2)]")), 0);
    }

    #[test]
    fn kinks_are_trivial() {
        let k = pd("PD[X(1,1,2,2)]");
        assert_eq!(signature(&k), 0);
        assert_eq!(determinant(&k), 1);
        assert_eq!(signature(&mirror(&k)), 0);
    }
}
