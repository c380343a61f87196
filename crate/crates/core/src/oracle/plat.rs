//! Plat closures of braid words.
//!
//! Strands are numbered 1..=2k left to right. Caps join strands (1,2),
//! (3,4), ... above and below the braid. Generator `i` crosses strands i and
//! i+1; in `σ_i` the strand running from top-left to bottom-right passes
//! over, in `σ_i^{-1}` it passes under.

use super::diagram::{Crossing, Diagram};
use crate::error::{precondition, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Port {
    TopLeft,
    TopRight,
    BottomLeft,
    BottomRight,
}

impl Port {
    fn xy(self) -> (i32, i32) {
        match self {
            Port::TopLeft => (-1, 1),
            Port::TopRight => (1, 1),
            Port::BottomLeft => (-1, -1),
            Port::BottomRight => (1, -1),
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Node {
    Cap,
    Port(usize, Port),
}

struct Graph {
    nodes: Vec<Node>,
    /// Partner through a crossing or along a cap.
    internal: Vec<usize>,
    /// Partner along a wire.
    external: Vec<usize>,
}

impl Graph {
    fn add_pair(&mut self, a: Node, b: Node) -> (usize, usize) {
        let i = self.nodes.len();
        self.nodes.extend([a, b]);
        self.internal.extend([i + 1, i]);
        self.external.extend([usize::MAX, usize::MAX]);
        (i, i + 1)
    }

    fn wire(&mut self, a: usize, b: usize) {
        self.external[a] = b;
        self.external[b] = a;
    }
}

/// The plat closure of `word` on `strands` strands; entry `±i` is `σ_i^{±1}`.
///
/// Components are oriented so that each starts by entering its first
/// crossing (in word order) at the top, with edges labelled 1, 2, ... along
/// the way. `open_edge` is set to 1.
pub fn plat(strands: usize, word: &[i32]) -> Result<Diagram> {
    if strands == 0 || strands % 2 == 1 {
        return precondition(format!("plats need an even number of strands (got {strands})"));
    }
    if let Some(&g) = word.iter().find(|g| **g == 0 || g.unsigned_abs() as usize >= strands) {
        return precondition(format!("generator {g} out of range for {strands} strands"));
    }
    let mut g = Graph { nodes: Vec::new(), internal: Vec::new(), external: Vec::new() };
    let mut ends = Vec::with_capacity(strands);
    for _ in 0..strands / 2 {
        let (a, b) = g.add_pair(Node::Cap, Node::Cap);
        ends.extend([a, b]);
    }
    // per crossing: (TL, TR, BL, BR) node ids
    let mut ports = Vec::with_capacity(word.len());
    for (c, &gen) in word.iter().enumerate() {
        let p = gen.unsigned_abs() as usize - 1;
        let (tl, br) = g.add_pair(Node::Port(c, Port::TopLeft), Node::Port(c, Port::BottomRight));
        let (tr, bl) = g.add_pair(Node::Port(c, Port::TopRight), Node::Port(c, Port::BottomLeft));
        g.wire(ends[p], tl);
        g.wire(ends[p + 1], tr);
        ends[p] = bl;
        ends[p + 1] = br;
        ports.push([tl, tr, bl, br]);
    }
    for j in 0..strands / 2 {
        let (a, b) = g.add_pair(Node::Cap, Node::Cap);
        g.wire(ends[2 * j], a);
        g.wire(ends[2 * j + 1], b);
    }

    // (in label, out label, entry port, exit port) for each strand of each crossing
    let mut strands_at: Vec<Vec<(u32, u32, Port, Port)>> = vec![Vec::new(); word.len()];
    let mut visited = vec![false; g.nodes.len()];
    let mut label = 1u32;
    let port_of = |v: usize| match g.nodes[v] {
        Node::Port(c, p) => (c, p),
        Node::Cap => unreachable!(),
    };
    for start in ports.iter().flat_map(|p| [p[0], p[1]]) {
        if visited[start] {
            continue;
        }
        let first = label;
        let mut cur_in = label;
        let mut v = start;
        loop {
            let w = g.internal[v];
            visited[v] = true;
            visited[w] = true;
            let mut u = g.external[w];
            while let Node::Cap = g.nodes[u] {
                visited[u] = true;
                visited[g.internal[u]] = true;
                u = g.external[g.internal[u]];
            }
            let out = if u == start { first } else { label + 1 };
            let (c, pin) = port_of(v);
            strands_at[c].push((cur_in, out, pin, port_of(w).1));
            if u == start {
                break;
            }
            label += 1;
            cur_in = out;
            v = u;
        }
        label += 1;
    }
    let mut free_loops = 0;
    for v in 0..g.nodes.len() {
        if !visited[v] {
            free_loops += 1;
            let mut u = v;
            loop {
                visited[u] = true;
                visited[g.internal[u]] = true;
                u = g.external[g.internal[u]];
                if u == v {
                    break;
                }
            }
        }
    }

    let crossings = word
        .iter()
        .zip(&strands_at)
        .map(|(&gen, st)| {
            let is_main = |p: Port| matches!(p, Port::TopLeft | Port::BottomRight);
            let (main, other) = if is_main(st[0].2) { (st[0], st[1]) } else { (st[1], st[0]) };
            let (over, under) = if gen > 0 { (main, other) } else { (other, main) };
            let dir = |s: (u32, u32, Port, Port)| {
                let (a, b) = (s.2.xy(), s.3.xy());
                (b.0 - a.0, b.1 - a.1)
            };
            let (o, u) = (dir(over), dir(under));
            let sign = if o.0 * u.1 - o.1 * u.0 > 0 { 1 } else { -1 };
            Crossing::new(sign, [under.0, under.1], [over.0, over.1])
        })
        .collect();
    let open_edge = (!word.is_empty()).then_some(1);
    Ok(Diagram { crossings, free_loops, open_edge })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_plat_is_unlink() {
        let d = plat(4, &[]).unwrap();
        assert_eq!(d.free_loops, 2);
        assert!(d.crossings.is_empty());
    }

    #[test]
    fn kink_has_one_crossing() {
        let d = plat(2, &[1]).unwrap();
        d.validate().unwrap();
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn two_bridge_words_are_valid() {
        for w in [&[2, 2, 2][..], &[2, 2, -1, 2], &[2, 2, -1, 2, 2]] {
            let d = plat(4, w).unwrap();
            d.validate().unwrap();
            assert_eq!(d.crossings.len(), w.len());
        }
        assert_eq!(plat(4, &[2, 2, -1, 2, 2]).unwrap().component_count(), 2);
        assert_eq!(plat(4, &[2, 2, -1, 2]).unwrap().component_count(), 1);
    }

    #[test]
    fn rejects_bad_words() {
        assert!(plat(3, &[1]).is_err());
        assert!(plat(4, &[4]).is_err());
        assert!(plat(4, &[0]).is_err());
    }
}
