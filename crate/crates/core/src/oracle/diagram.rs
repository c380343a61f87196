//! Oriented link diagrams as labelled crossings.
//!
//! Every edge of the diagram runs from one crossing to the next and carries
//! a positive label. A crossing lists the labels of its incoming and
//! outgoing under-edges and over-edges, so each label appears exactly once
//! as an incoming edge and once as an outgoing one. Components without
//! crossings are counted in `free_loops`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Crossing {
    /// +1 or -1.
    pub sign: i8,
    /// `[in, out]` labels of the under-strand.
    pub under: [u32; 2],
    /// `[in, out]` labels of the over-strand.
    pub over: [u32; 2],
}

impl Crossing {
    pub fn new(sign: i8, under: [u32; 2], over: [u32; 2]) -> Self {
        Crossing { sign, under, over }
    }

    /// The same crossing with the strands' heights exchanged.
    pub fn switched(&self) -> Self {
        Crossing { sign: -self.sign, under: self.over, over: self.under }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagram {
    pub crossings: Vec<Crossing>,
    #[serde(default)]
    pub free_loops: u32,
    /// The edge cut open for the (1,1)-tangle, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub open_edge: Option<u32>,
}

/// Where an edge ends: crossing index and whether it arrives as the over-strand.
#[derive(Clone, Copy, Debug)]
struct Arrival {
    crossing: usize,
    over: bool,
}

impl Diagram {
    pub fn unknot() -> Self {
        Diagram { crossings: Vec::new(), free_loops: 1, open_edge: None }
    }

    pub fn writhe(&self) -> i32 {
        self.crossings.iter().map(|c| c.sign as i32).sum()
    }

    /// All edge labels, sorted.
    pub fn edges(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.crossings.iter().flat_map(|c| [c.under[0], c.over[0]]).collect();
        v.sort_unstable();
        v
    }

    pub fn validate(&self) -> Result<()> {
        let mut ins = BTreeSet::new();
        let mut outs = BTreeSet::new();
        for (k, c) in self.crossings.iter().enumerate() {
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::InvalidDiagram(format!("crossing {k} has sign {}", c.sign)));
            }
            for e in [c.under[0], c.over[0]] {
                if !ins.insert(e) {
                    return Err(Error::InvalidDiagram(format!("edge {e} enters twice")));
                }
            }
            for e in [c.under[1], c.over[1]] {
                if !outs.insert(e) {
                    return Err(Error::InvalidDiagram(format!("edge {e} leaves twice")));
                }
            }
        }
        if ins != outs {
            let bad = ins.symmetric_difference(&outs).next().unwrap();
            return Err(Error::InvalidDiagram(format!("edge {bad} has only one end")));
        }
        if let Some(e) = self.open_edge {
            if !ins.contains(&e) {
                return Err(Error::InvalidDiagram(format!("open edge {e} is not an edge")));
            }
        }
        Ok(())
    }

    fn arrivals(&self) -> BTreeMap<u32, Arrival> {
        let mut m = BTreeMap::new();
        for (k, c) in self.crossings.iter().enumerate() {
            m.insert(c.under[0], Arrival { crossing: k, over: false });
            m.insert(c.over[0], Arrival { crossing: k, over: true });
        }
        m
    }

    fn successor(&self, arr: &BTreeMap<u32, Arrival>, e: u32) -> u32 {
        let a = arr[&e];
        let c = &self.crossings[a.crossing];
        if a.over {
            c.over[1]
        } else {
            c.under[1]
        }
    }

    /// Edge cycles of the components with crossings. Components are ordered
    /// by their smallest label and each starts there, except that with
    /// `open_first` the component of the open edge comes first, starting at
    /// the open edge.
    pub fn components(&self, open_first: bool) -> Vec<Vec<u32>> {
        let arr = self.arrivals();
        let mut seen = BTreeSet::new();
        let mut starts: Vec<u32> = Vec::new();
        if let (true, Some(e)) = (open_first, self.open_edge) {
            starts.push(e);
        }
        starts.extend(arr.keys().copied());
        let mut out = Vec::new();
        for s in starts {
            if seen.contains(&s) {
                continue;
            }
            let mut cyc = vec![s];
            seen.insert(s);
            let mut e = self.successor(&arr, s);
            while e != s {
                seen.insert(e);
                cyc.push(e);
                e = self.successor(&arr, e);
            }
            out.push(cyc);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components(false).len() + self.free_loops as usize
    }

    /// The first crossing met from below, walking the components in order,
    /// or `None` when the diagram is descending (a trivial link).
    pub fn first_ascending(&self, open_first: bool) -> Option<usize> {
        let arr = self.arrivals();
        let mut met = vec![false; self.crossings.len()];
        for cyc in self.components(open_first) {
            for e in cyc {
                let a = arr[&e];
                if !met[a.crossing] {
                    met[a.crossing] = true;
                    if !a.over {
                        return Some(a.crossing);
                    }
                }
            }
        }
        None
    }

    pub fn switched(&self, k: usize) -> Self {
        let mut d = self.clone();
        d.crossings[k] = d.crossings[k].switched();
        d
    }

    /// Every crossing switched: the mirror image.
    pub fn mirror(&self) -> Self {
        let mut d = self.clone();
        for c in &mut d.crossings {
            *c = c.switched();
        }
        d
    }

    /// The oriented resolution at crossing `k`: under-in joins over-out and
    /// over-in joins under-out.
    pub fn smoothed(&self, k: usize) -> Self {
        let c = &self.crossings[k];
        let mut uf = UnionFind::default();
        uf.union(c.under[0], c.over[1]);
        uf.union(c.over[0], c.under[1]);
        let touched: BTreeSet<u32> = [c.under[0], c.under[1], c.over[0], c.over[1]].into();
        let crossings: Vec<Crossing> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, x)| Crossing {
                sign: x.sign,
                under: [uf.find(x.under[0]), uf.find(x.under[1])],
                over: [uf.find(x.over[0]), uf.find(x.over[1])],
            })
            .collect();
        let used: BTreeSet<u32> = crossings.iter().flat_map(|x| [x.under[0], x.over[0]]).collect();
        let classes: BTreeSet<u32> = touched.iter().map(|&e| uf.find(e)).collect();
        let new_loops = classes.iter().filter(|e| !used.contains(e)).count() as u32;
        let open_edge = self.open_edge.map(|e| uf.find(e)).filter(|e| used.contains(e));
        Diagram { crossings, free_loops: self.free_loops + new_loops, open_edge }
    }

    /// Reverses the orientation of the component through edge `e`.
    pub fn reverse_component(&self, e: u32) -> Result<Self> {
        let comp: BTreeSet<u32> = self
            .components(false)
            .into_iter()
            .find(|c| c.contains(&e))
            .ok_or_else(|| Error::InvalidDiagram(format!("edge {e} is not on a component")))?
            .into_iter()
            .collect();
        let mut d = self.clone();
        for c in &mut d.crossings {
            let u = comp.contains(&c.under[0]);
            let o = comp.contains(&c.over[0]);
            if u {
                c.under.swap(0, 1);
            }
            if o {
                c.over.swap(0, 1);
            }
            if u != o {
                c.sign = -c.sign;
            }
        }
        Ok(d)
    }

    /// Relabels edges 1, 2, ... in traversal order, so that diagrams that
    /// differ only by labels compare equal.
    pub fn canonical(&self) -> Self {
        let mut map = BTreeMap::new();
        for e in self.components(true).into_iter().flatten() {
            let next = map.len() as u32 + 1;
            map.insert(e, next);
        }
        let mut crossings: Vec<Crossing> = self
            .crossings
            .iter()
            .map(|c| Crossing {
                sign: c.sign,
                under: [map[&c.under[0]], map[&c.under[1]]],
                over: [map[&c.over[0]], map[&c.over[1]]],
            })
            .collect();
        crossings.sort();
        Diagram {
            crossings,
            free_loops: self.free_loops,
            open_edge: self.open_edge.map(|e| map[&e]),
        }
    }
}

#[derive(Default)]
struct UnionFind {
    parent: BTreeMap<u32, u32>,
}

impl UnionFind {
    fn find(&self, mut e: u32) -> u32 {
        while let Some(&p) = self.parent.get(&e) {
            e = p;
        }
        e
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent.insert(hi, lo);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // one-crossing kink: edge 1 leaves over and comes back under
    fn kink(sign: i8) -> Diagram {
        Diagram { crossings: vec![Crossing::new(sign, [2, 1], [1, 2])], free_loops: 0, open_edge: None }
    }

    #[test]
    fn validation() {
        assert!(kink(1).validate().is_ok());
        let bad = Diagram { crossings: vec![Crossing::new(1, [1, 2], [1, 3])], ..Default::default() };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn kink_smoothing_splits_off_a_loop() {
        let d = kink(1).smoothed(0);
        assert!(d.crossings.is_empty());
        assert_eq!(d.free_loops, 2);
    }

    #[test]
    fn kink_components() {
        assert_eq!(kink(-1).components(false), vec![vec![1, 2]]);
        assert_eq!(kink(1).component_count(), 1);
    }
}
