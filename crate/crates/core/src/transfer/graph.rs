use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;

use super::PolyMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gender {
    F,
    M,
}

impl Gender {
    pub fn symbol(self) -> char {
        match self {
            Gender::F => 'f',
            Gender::M => 'm',
        }
    }
}

/// A window of consecutive genders around the table. `starred` marks the
/// last adjacent pair of the window as a seated married couple.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DeBruijnNode {
    pub starred: bool,
    pub word: Vec<Gender>,
}

impl DeBruijnNode {
    pub fn label(&self) -> String {
        let mut s: String = self.word.iter().map(|g| g.symbol()).collect();
        if self.starred {
            s.push('*');
        }
        s
    }
}

impl fmt::Display for DeBruijnNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// One arc `src → dst`; `appended` is the gender entering the window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub src: usize,
    pub dst: usize,
    pub appended: Gender,
    pub starred: bool,
}

impl Arc {
    /// `y^{±1}` for the appended gender, times `z` if the target is starred.
    pub fn weight(&self) -> LaurentPoly {
        let e_y = if self.appended == Gender::M { 1 } else { -1 };
        LaurentPoly::monomial(e_y, self.starred as u32, 0)
    }
}

/// The weighted de Bruijn graph for forbidden same-gender runs of length `k`.
#[derive(Clone, Debug)]
pub struct DeBruijnGraph {
    k: usize,
    nodes: Vec<DeBruijnNode>,
    arcs: Vec<Arc>,
    adjacency: PolyMatrix,
}

fn has_run(word: &[Gender], k: usize) -> bool {
    word.windows(k).any(|w| w.iter().all(|&g| g == w[0]))
}

/// Word length for run bound `k`: long enough to see a whole forbidden run
/// after one step, and at least 2 so the final pair can carry the star.
pub fn word_len(k: usize) -> usize {
    (k - 1).max(2)
}

impl DeBruijnGraph {
    pub fn build(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::Domain(format!("run bound k must be >= 2, got {k}")));
        }
        if k > 24 {
            return Err(Error::Domain(format!("run bound k = {k} is too large")));
        }
        let len = word_len(k);
        let mut nodes = Vec::new();
        for bits in 0..1u32 << len {
            let word: Vec<Gender> = (0..len)
                .map(|i| if bits >> (len - 1 - i) & 1 == 1 { Gender::M } else { Gender::F })
                .collect();
            if has_run(&word, k) {
                continue;
            }
            let mixed_tail = word[len - 2] != word[len - 1];
            nodes.push(DeBruijnNode { starred: false, word: word.clone() });
            if mixed_tail {
                nodes.push(DeBruijnNode { starred: true, word });
            }
        }
        nodes.sort();

        let mut arcs = Vec::new();
        for (src, u) in nodes.iter().enumerate() {
            for (dst, v) in nodes.iter().enumerate() {
                if u.starred && v.starred {
                    continue;
                }
                if u.word[1..] != v.word[..len - 1] {
                    continue;
                }
                let appended = v.word[len - 1];
                let mut joined = u.word.clone();
                joined.push(appended);
                if has_run(&joined, k) {
                    continue;
                }
                arcs.push(Arc { src, dst, appended, starred: v.starred });
            }
        }

        let mut adjacency = PolyMatrix::zero(nodes.len());
        for a in &arcs {
            adjacency.set(a.src, a.dst, a.weight());
        }
        Ok(DeBruijnGraph { k, nodes, arcs, adjacency })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn nodes(&self) -> &[DeBruijnNode] {
        &self.nodes
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn adjacency(&self) -> &PolyMatrix {
        &self.adjacency
    }

    pub fn node_index(&self, label: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.label() == label)
    }

    pub fn max_out_degree(&self) -> usize {
        let mut deg = vec![0usize; self.nodes.len()];
        for a in &self.arcs {
            deg[a.src] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    /// One line per arc, `<src> -> <dst> : <weight>`, in node order.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for a in &self.arcs {
            out.push_str(&format!("{} -> {} : {}\n", self.nodes[a.src], self.nodes[a.dst], a.weight()));
        }
        out
    }
}

pub fn build_graph(k: usize) -> Result<DeBruijnGraph> {
    DeBruijnGraph::build(k)
}
