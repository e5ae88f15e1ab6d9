//! Planar link diagrams as rotation systems.
//!
//! Each crossing has four slots numbered counterclockwise. Slots `0, 2` form
//! one strand and `1, 3` the other; `over13` says which of the two is on top.
//! `nbr[c][s]` is the slot at the far end of the edge leaving slot `s`.
//! This is the working representation for the skein recursion and for the
//! checkerboard (Goeritz) computations; [`crate::pd::PDCode`] is the
//! exchange format.

use std::collections::HashMap;

/// `(crossing, slot)`.
pub type Dart = (usize, u8);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    nbr: Vec<[Dart; 4]>,
    over13: Vec<bool>,
    out: Vec<[bool; 4]>,
    free_loops: usize,
}

#[inline]
fn rot(s: u8, k: u8) -> u8 {
    (s + k) % 4
}

impl Diagram {
    /// Builds a diagram from raw parts; used by the PD conversion.
    ///
    /// `nbr` must be an involution on darts, and `out` must mark exactly one
    /// end of every strand and of every edge as outgoing.
    pub(crate) fn from_parts(nbr: Vec<[Dart; 4]>, over13: Vec<bool>, out: Vec<[bool; 4]>, free_loops: usize) -> Self {
        Diagram { nbr, over13, out, free_loops }
    }

    pub fn unknot() -> Self {
        Diagram::unlink(1)
    }

    pub fn unlink(components: usize) -> Self {
        Diagram { nbr: Vec::new(), over13: Vec::new(), out: Vec::new(), free_loops: components }
    }

    pub fn crossing_count(&self) -> usize {
        self.nbr.len()
    }

    /// Components with no crossings at all.
    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn neighbor(&self, d: Dart) -> Dart {
        self.nbr[d.0][d.1 as usize]
    }

    pub fn is_over(&self, d: Dart) -> bool {
        (d.1 % 2 == 1) == self.over13[d.0]
    }

    pub fn is_outgoing(&self, d: Dart) -> bool {
        self.out[d.0][d.1 as usize]
    }

    fn slot_where(&self, c: usize, over: bool, outgoing: bool) -> u8 {
        (0..4u8)
            .find(|&s| self.is_over((c, s)) == over && self.out[c][s as usize] == outgoing)
            .expect("every strand has one incoming and one outgoing slot")
    }

    /// Crossing sign under the current orientation.
    pub fn sign(&self, c: usize) -> i8 {
        let u_in = self.slot_where(c, false, false);
        let o_out = self.slot_where(c, true, true);
        if o_out == rot(u_in, 1) {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self) -> i64 {
        (0..self.crossing_count()).map(|c| self.sign(c) as i64).sum()
    }

    pub fn switch(&mut self, c: usize) {
        self.over13[c] = !self.over13[c];
    }

    pub fn switched(&self, c: usize) -> Self {
        let mut d = self.clone();
        d.switch(c);
        d
    }

    /// Component walks as sequences of incoming darts, each starting from its
    /// smallest outgoing dart; components are ordered by that dart.
    pub fn components(&self) -> Vec<Vec<Dart>> {
        let n = self.crossing_count();
        let mut seen = vec![[false; 4]; n];
        let mut comps = Vec::new();
        for c in 0..n {
            for s in 0..4u8 {
                if seen[c][s as usize] || !self.out[c][s as usize] {
                    continue;
                }
                let start = (c, s);
                let mut walk = Vec::new();
                let mut cur = start;
                loop {
                    seen[cur.0][cur.1 as usize] = true;
                    let arrive = self.neighbor(cur);
                    seen[arrive.0][arrive.1 as usize] = true;
                    walk.push(arrive);
                    cur = (arrive.0, rot(arrive.1, 2));
                    if cur == start {
                        break;
                    }
                }
                comps.push(walk);
            }
        }
        comps
    }

    /// Total number of link components, free loops included.
    pub fn component_count(&self) -> usize {
        self.components().len() + self.free_loops
    }

    /// Component index of each strand, keyed by `(crossing, slot % 2)`.
    fn strand_components(&self) -> Vec<[usize; 2]> {
        let mut comp = vec![[usize::MAX; 2]; self.crossing_count()];
        for (k, walk) in self.components().iter().enumerate() {
            for &(c, s) in walk {
                comp[c][(s % 2) as usize] = k;
            }
        }
        comp
    }

    /// Sum of the signs of crossings between a component and itself.
    pub fn self_writhe(&self) -> i64 {
        let comp = self.strand_components();
        (0..self.crossing_count()).filter(|&c| comp[c][0] == comp[c][1]).map(|c| self.sign(c) as i64).sum()
    }

    /// First crossing met on its under strand when walking the components
    /// in order; `None` for a descending diagram.
    pub fn first_ascending_crossing(&self) -> Option<usize> {
        let mut visited = vec![false; self.crossing_count()];
        for walk in self.components() {
            for (c, s) in walk {
                if !visited[c] {
                    if !self.is_over((c, s)) {
                        return Some(c);
                    }
                    visited[c] = true;
                }
            }
        }
        None
    }

    /// Removes a set of crossings. `pairing[k][s]` says which slot of the
    /// k-th removed crossing the curve continues to after entering at `s`.
    /// Closed curves left without crossings become free loops. Orientation
    /// flags of surviving slots are kept as they are.
    pub fn remove_crossings(&self, removed: &[(usize, [u8; 4])]) -> Self {
        let n = self.crossing_count();
        let mut partner: Vec<Option<[u8; 4]>> = vec![None; n];
        for &(c, p) in removed {
            partner[c] = Some(p);
        }
        let mut new_index = vec![usize::MAX; n];
        let mut kept = 0;
        for c in 0..n {
            if partner[c].is_none() {
                new_index[c] = kept;
                kept += 1;
            }
        }
        let mut used = vec![[false; 4]; n];
        let mut nbr = Vec::with_capacity(kept);
        let mut over13 = Vec::with_capacity(kept);
        let mut out = Vec::with_capacity(kept);
        for c in 0..n {
            if partner[c].is_some() {
                continue;
            }
            let mut row = [(0usize, 0u8); 4];
            for s in 0..4u8 {
                let mut far = self.neighbor((c, s));
                while let Some(p) = partner[far.0] {
                    used[far.0][far.1 as usize] = true;
                    let exit = p[far.1 as usize];
                    used[far.0][exit as usize] = true;
                    far = self.neighbor((far.0, exit));
                }
                row[s as usize] = (new_index[far.0], far.1);
            }
            nbr.push(row);
            over13.push(self.over13[c]);
            out.push(self.out[c]);
        }
        let mut free_loops = self.free_loops;
        for &(c, p) in removed {
            for s in 0..4u8 {
                if used[c][s as usize] {
                    continue;
                }
                free_loops += 1;
                let mut cur = (c, s);
                while !used[cur.0][cur.1 as usize] {
                    used[cur.0][cur.1 as usize] = true;
                    let pp = partner[cur.0].expect("closed loop stays among removed crossings");
                    let exit = pp[cur.1 as usize];
                    used[cur.0][exit as usize] = true;
                    cur = self.neighbor((cur.0, exit));
                }
                let _ = p;
            }
        }
        Diagram { nbr, over13, out, free_loops }
    }

    fn pairing_from(pairs: [(u8, u8); 2]) -> [u8; 4] {
        let mut p = [0u8; 4];
        for (x, y) in pairs {
            p[x as usize] = y;
            p[y as usize] = x;
        }
        p
    }

    /// Orientation-respecting smoothing of crossing `c`.
    pub fn smooth_oriented(&self, c: usize) -> Self {
        let u_in = self.slot_where(c, false, false);
        let u_out = self.slot_where(c, false, true);
        let o_in = self.slot_where(c, true, false);
        let o_out = self.slot_where(c, true, true);
        self.remove_crossings(&[(c, Self::pairing_from([(u_in, o_out), (o_in, u_out)]))])
    }

    /// The other smoothing of crossing `c`; the result is re-oriented.
    pub fn smooth_unoriented(&self, c: usize) -> Self {
        let u_in = self.slot_where(c, false, false);
        let u_out = self.slot_where(c, false, true);
        let o_in = self.slot_where(c, true, false);
        let o_out = self.slot_where(c, true, true);
        let mut d = self.remove_crossings(&[(c, Self::pairing_from([(u_in, o_in), (o_out, u_out)]))]);
        d.reorient();
        d
    }

    /// Recomputes a consistent orientation, starting each component at its
    /// smallest unvisited dart.
    pub fn reorient(&mut self) {
        let n = self.crossing_count();
        let mut done = vec![[false; 4]; n];
        for c in 0..n {
            for s in 0..4u8 {
                if done[c][s as usize] {
                    continue;
                }
                let start = (c, s);
                let mut cur = start;
                loop {
                    done[cur.0][cur.1 as usize] = true;
                    self.out[cur.0][cur.1 as usize] = true;
                    let arrive = self.neighbor(cur);
                    done[arrive.0][arrive.1 as usize] = true;
                    self.out[arrive.0][arrive.1 as usize] = false;
                    cur = (arrive.0, rot(arrive.1, 2));
                    if cur == start {
                        break;
                    }
                }
            }
        }
    }

    /// A Reidemeister I loop: `(crossing, slot)` whose edge returns to the
    /// next slot counterclockwise.
    pub fn find_r1(&self) -> Option<(usize, u8)> {
        (0..self.crossing_count())
            .flat_map(|c| (0..4u8).map(move |s| (c, s)))
            .find(|&(c, s)| self.neighbor((c, s)) == (c, rot(s, 1)))
    }

    /// Sign of the curl removed and the diagram without it.
    pub fn remove_r1(&self, c: usize, s: u8) -> (i8, Self) {
        let sign = self.sign(c);
        let pairing = Self::pairing_from([(rot(s, 1), rot(s, 2)), (rot(s, 3), s)]);
        (sign, self.remove_crossings(&[(c, pairing)]))
    }

    /// A Reidemeister II bigon: two crossings joined by edges at adjacent
    /// slots, with the same strand on top at both.
    pub fn find_r2(&self) -> Option<(usize, u8, usize, u8)> {
        for c1 in 0..self.crossing_count() {
            for p in 0..4u8 {
                let (c2, q) = self.neighbor((c1, p));
                if c2 == c1 {
                    continue;
                }
                if self.neighbor((c1, rot(p, 1))) != (c2, rot(q, 3)) {
                    continue;
                }
                if self.is_over((c1, p)) == self.is_over((c2, q)) {
                    return Some((c1, p, c2, q));
                }
            }
        }
        None
    }

    pub fn remove_r2(&self, c1: usize, _p: u8, c2: usize, _q: u8) -> Self {
        let straight = [2u8, 3, 0, 1];
        self.remove_crossings(&[(c1, straight), (c2, straight)])
    }

    /// Greedily removes R1 curls and R2 bigons; returns the signs of the
    /// curls removed.
    pub fn simplify(&self) -> (Vec<i8>, Self) {
        let mut d = self.clone();
        let mut curls = Vec::new();
        loop {
            if let Some((c, s)) = d.find_r1() {
                let (sign, next) = d.remove_r1(c, s);
                curls.push(sign);
                d = next;
            } else if let Some((c1, p, c2, q)) = d.find_r2() {
                d = d.remove_r2(c1, p, c2, q);
            } else {
                return (curls, d);
            }
        }
    }

    /// Splits into pieces connected through crossings. Free loops are not
    /// included in any piece.
    pub fn pieces(&self) -> Vec<Diagram> {
        let n = self.crossing_count();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            label[start] = count;
            while let Some(c) = stack.pop() {
                for s in 0..4 {
                    let (d, _) = self.nbr[c][s];
                    if label[d] == usize::MAX {
                        label[d] = count;
                        stack.push(d);
                    }
                }
            }
            count += 1;
        }
        if count <= 1 {
            let mut only = self.clone();
            only.free_loops = 0;
            return if n == 0 { Vec::new() } else { vec![only] };
        }
        (0..count)
            .map(|k| {
                let members: Vec<usize> = (0..n).filter(|&c| label[c] == k).collect();
                let mut idx = HashMap::new();
                for (i, &c) in members.iter().enumerate() {
                    idx.insert(c, i);
                }
                let nbr = members
                    .iter()
                    .map(|&c| {
                        let mut row = self.nbr[c];
                        for d in row.iter_mut() {
                            d.0 = idx[&d.0];
                        }
                        row
                    })
                    .collect();
                Diagram {
                    nbr,
                    over13: members.iter().map(|&c| self.over13[c]).collect(),
                    out: members.iter().map(|&c| self.out[c]).collect(),
                    free_loops: 0,
                }
            })
            .collect()
    }

    /// Canonical encoding of an oriented connected diagram, independent of
    /// crossing numbering and of where slot numbering starts at each crossing.
    pub fn canonical_key(&self) -> Vec<u32> {
        let n = self.crossing_count();
        let mut best: Option<Vec<u32>> = None;
        for c in 0..n {
            for s in 0..4u8 {
                if self.out[c][s as usize] {
                    let key = self.encode_from((c, s));
                    if best.as_ref().is_none_or(|b| key < *b) {
                        best = Some(key);
                    }
                }
            }
        }
        let mut key = vec![n as u32, self.free_loops as u32];
        key.extend(best.unwrap_or_default());
        key
    }

    fn encode_from(&self, start: Dart) -> Vec<u32> {
        let n = self.crossing_count();
        let mut id = vec![u32::MAX; n];
        let mut base = vec![0u8; n];
        let mut order = Vec::with_capacity(n);
        let mut walked = vec![[false; 4]; n];
        let mut code = Vec::with_capacity(4 * n + 8);
        let mut next_start = Some(start);
        while let Some(first) = next_start {
            let mut cur = first;
            loop {
                walked[cur.0][cur.1 as usize] = true;
                let (c, s) = self.neighbor(cur);
                if id[c] == u32::MAX {
                    id[c] = order.len() as u32;
                    base[c] = s;
                    order.push(c);
                }
                let rel = (s + 4 - base[c]) % 4;
                code.push(id[c] * 8 + rel as u32 * 2 + self.is_over((c, s)) as u32);
                cur = (c, rot(s, 2));
                if cur == first {
                    break;
                }
            }
            code.push(u32::MAX);
            next_start = None;
            'search: for &c in &order {
                for k in 0..4u8 {
                    let s = rot(base[c], k);
                    if self.out[c][s as usize] && !walked[c][s as usize] {
                        next_start = Some((c, s));
                        break 'search;
                    }
                }
            }
        }
        code
    }

    /// Faces of the projection as lists of corners `(crossing, k)`, corner
    /// `k` lying between slots `k` and `k + 1`.
    pub fn faces(&self) -> Vec<Vec<(usize, u8)>> {
        let n = self.crossing_count();
        let mut seen = vec![[false; 4]; n];
        let mut faces = Vec::new();
        for c in 0..n {
            for s in 0..4u8 {
                if seen[c][s as usize] {
                    continue;
                }
                let mut face = Vec::new();
                let mut leave = (c, s);
                while !seen[leave.0][leave.1 as usize] {
                    seen[leave.0][leave.1 as usize] = true;
                    let (c2, s2) = self.neighbor(leave);
                    face.push((c2, s2));
                    leave = (c2, rot(s2, 1));
                }
                faces.push(face);
            }
        }
        faces
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd::PDCode;

    fn diagram(pd: &str) -> Diagram {
        Diagram::from_pd(&pd.parse::<PDCode>().unwrap())
    }

    const TREFOIL: &str = "PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]";

    #[test]
    fn trefoil_structure() {
        let d = diagram(TREFOIL);
        assert_eq!(d.writhe(), 3);
        assert_eq!(d.components().len(), 1);
        assert_eq!(d.faces().len(), 5);
        assert!(d.find_r1().is_none());
        assert!(d.find_r2().is_none());
    }

    #[test]
    fn switching_negates_sign() {
        let d = diagram(TREFOIL);
        for c in 0..3 {
            assert_eq!(d.switched(c).sign(c), -d.sign(c));
        }
    }

    #[test]
    fn smoothing_a_trefoil_crossing_gives_a_hopf_link() {
        let d = diagram(TREFOIL);
        let h = d.smooth_oriented(0);
        assert_eq!(h.crossing_count(), 2);
        assert_eq!(h.component_count(), 2);
        assert_eq!(h.writhe(), 2);
        let u = d.smooth_unoriented(0);
        assert_eq!(u.component_count(), 1);
    }

    #[test]
    fn kink_reduces_to_unknot() {
        let d = diagram("PD[X(1,1,2,2)]");
        let (curls, u) = d.simplify();
        assert_eq!(curls, vec![1]);
        assert_eq!(u.crossing_count(), 0);
        assert_eq!(u.free_loops(), 1);
    }

    #[test]
    fn canonical_key_ignores_labels() {
        let a = diagram(TREFOIL);
        let b = diagram("PD[X(3,1,4,6), X(5,3,6,2), X(1,5,2,4)]");
        let c = diagram("PD[X(3,7,4,6), X(5,3,6,2), X(1,5,2,4)]".replace('7', "1").as_str());
        assert_eq!(a.canonical_key(), b.canonical_key());
        assert_eq!(a.canonical_key(), c.canonical_key());
        assert_ne!(a.canonical_key(), a.switched(0).canonical_key());
    }

    #[test]
    fn descending_detection() {
        let d = diagram(TREFOIL);
        let bad = d.first_ascending_crossing().expect("trefoil diagram is not descending");
        let e = d.switched(bad);
        assert_ne!(e.first_ascending_crossing(), Some(bad));
    }
}
