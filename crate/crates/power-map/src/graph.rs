//! Functional graphs of the power map x ↦ x^a and their exact structure.
//!
//! Each node has one outgoing edge, so every weakly connected component is a
//! cycle with rooted trees hanging off the cycle nodes. Decomposition,
//! average cycle length over all nodes, a relabeling-invariant certificate,
//! and DOT export all live here.

use std::io::{self, Write};

use crate::arith::ExactRational;
use crate::groups::{element_power, FiniteGroup};

/// The power map on one realized group, stored as a successor array.
pub struct PowerGraph {
    group_name: String,
    exponent: u64,
    identity: u32,
    succ: Vec<u32>,
}

/// Builds the functional graph of x ↦ x^a; a ≥ 1.
pub fn build(g: &FiniteGroup, a: u64) -> PowerGraph {
    assert!(a >= 1, "exponent must be at least 1");
    let succ = (0..g.order())
        .map(|x| element_power(g, x, a) as u32)
        .collect();
    PowerGraph {
        group_name: g.name().to_string(),
        exponent: a,
        identity: g.identity() as u32,
        succ,
    }
}

impl PowerGraph {
    pub fn group_name(&self) -> &str {
        &self.group_name
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn identity(&self) -> usize {
        self.identity as usize
    }

    pub fn node_count(&self) -> usize {
        self.succ.len()
    }

    pub fn successor(&self, x: usize) -> usize {
        self.succ[x] as usize
    }
}

/// One weakly connected component: its cycle (in successor order, smallest
/// node first) and its total node count.
#[derive(Debug, Clone)]
pub struct Component {
    pub cycle: Vec<u32>,
    pub size: u32,
}

/// Full component/cycle/tail structure of a power graph.
pub struct Decomposition {
    component_of: Vec<u32>,
    dist_to_cycle: Vec<u32>,
    components: Vec<Component>,
}

impl Decomposition {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_of(&self, x: usize) -> usize {
        self.component_of[x] as usize
    }

    /// 0 exactly for the purely periodic nodes.
    pub fn distance_to_cycle(&self, x: usize) -> usize {
        self.dist_to_cycle[x] as usize
    }

    pub fn is_on_cycle(&self, x: usize) -> bool {
        self.dist_to_cycle[x] == 0
    }

    /// Cycle lengths per component, ascending.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.components.iter().map(|c| c.cycle.len()).collect();
        lens.sort_unstable();
        lens
    }
}

/// Splits the graph into components by successor walks, three states per
/// node: untouched, on the current walk, settled.
pub fn decompose(pg: &PowerGraph) -> Decomposition {
    const UNSEEN: u8 = 0;
    const WALKING: u8 = 1;
    const DONE: u8 = 2;
    let n = pg.succ.len();
    let mut state = vec![UNSEEN; n];
    let mut component_of = vec![0u32; n];
    let mut dist = vec![0u32; n];
    let mut components: Vec<Component> = Vec::new();
    let mut path: Vec<u32> = Vec::new();

    for start in 0..n {
        if state[start] != UNSEEN {
            continue;
        }
        let mut v = start;
        while state[v] == UNSEEN {
            state[v] = WALKING;
            path.push(v as u32);
            v = pg.succ[v] as usize;
        }
        if state[v] == WALKING {
            // Found a new cycle; it is the tail of the current path.
            let id = components.len() as u32;
            let mut cycle = Vec::new();
            loop {
                let u = path.pop().unwrap();
                state[u as usize] = DONE;
                component_of[u as usize] = id;
                dist[u as usize] = 0;
                cycle.push(u);
                if u as usize == v {
                    break;
                }
            }
            cycle.reverse();
            let min_pos = cycle
                .iter()
                .enumerate()
                .min_by_key(|(_, &u)| u)
                .map(|(i, _)| i)
                .unwrap();
            cycle.rotate_left(min_pos);
            components.push(Component { cycle, size: 0 });
        }
        // Whatever remains on the path drains into a settled node.
        while let Some(u) = path.pop() {
            let u = u as usize;
            let next = pg.succ[u] as usize;
            state[u] = DONE;
            component_of[u] = component_of[next];
            dist[u] = dist[next] + 1;
        }
    }
    for x in 0..n {
        components[component_of[x] as usize].size += 1;
    }
    Decomposition {
        component_of,
        dist_to_cycle: dist,
        components,
    }
}

/// Mean cycle length seen from a uniformly random node:
/// (Σ_components size · cycle length) / |G|, exactly.
pub fn average_period(d: &Decomposition) -> ExactRational {
    let total: u128 = d
        .components
        .iter()
        .map(|c| c.size as u128 * c.cycle.len() as u128)
        .sum();
    let nodes: u128 = d.components.iter().map(|c| c.size as u128).sum();
    ExactRational::new(total.into(), nodes.into())
}

/// Canonical form of a power graph: equal exactly for isomorphic functional
/// graphs, independent of node labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate(String);

impl Certificate {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

/// Rooted-tree code per node: `(` + child codes in sorted order + `)`,
/// over the tail edges only. Leaves get `()`.
fn tree_codes(pg: &PowerGraph, d: &Decomposition) -> Vec<String> {
    let n = pg.succ.len();
    let mut tail_preds: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut by_depth: Vec<u32> = (0..n as u32).collect();
    for x in 0..n {
        if d.dist_to_cycle[x] > 0 {
            tail_preds[pg.succ[x] as usize].push(x as u32);
        }
    }
    by_depth.sort_unstable_by_key(|&x| std::cmp::Reverse(d.dist_to_cycle[x as usize]));
    let mut codes: Vec<String> = vec![String::new(); n];
    for &x in &by_depth {
        let x = x as usize;
        let mut child_codes: Vec<&str> = tail_preds[x]
            .iter()
            .map(|&c| codes[c as usize].as_str())
            .collect();
        child_codes.sort_unstable();
        let mut code = String::with_capacity(2 + child_codes.iter().map(|c| c.len()).sum::<usize>());
        code.push('(');
        for c in child_codes {
            code.push_str(c);
        }
        code.push(')');
        codes[x] = code;
    }
    codes
}

/// Booth's least-rotation: index of the lexicographically smallest rotation.
fn least_rotation(s: &[u32]) -> usize {
    let n = s.len();
    let at = |i: usize| s[i % n];
    let mut fail: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = fail[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = fail[i as usize];
        }
        if i == -1 && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            fail[j - k] = -1;
        } else if i == -1 {
            fail[j - k] = 0;
        } else {
            fail[j - k] = i + 1;
        }
    }
    k
}

/// Canonical certificate: the sorted multiset, over components, of
/// (cycle length, cyclically minimal sequence of hanging-tree codes).
pub fn certificate(pg: &PowerGraph, d: &Decomposition) -> Certificate {
    let codes = tree_codes(pg, d);
    let mut component_keys: Vec<String> = d
        .components
        .iter()
        .map(|comp| {
            let seq: Vec<&str> = comp
                .cycle
                .iter()
                .map(|&u| codes[u as usize].as_str())
                .collect();
            // Rank-map the codes so Booth runs on integers; ranks are
            // order-isomorphic to the strings.
            let mut sorted: Vec<&str> = seq.clone();
            sorted.sort_unstable();
            sorted.dedup();
            let ranks: Vec<u32> = seq
                .iter()
                .map(|c| sorted.binary_search(c).unwrap() as u32)
                .collect();
            let shift = least_rotation(&ranks);
            let mut key = format!("{}:", seq.len());
            for i in 0..seq.len() {
                key.push_str(seq[(shift + i) % seq.len()]);
            }
            key
        })
        .collect();
    component_keys.sort_unstable();
    Certificate(component_keys.join(";"))
}

/// Do all purely periodic nodes carry isomorphic hanging trees?
pub fn tails_uniform(pg: &PowerGraph, d: &Decomposition) -> bool {
    let codes = tree_codes(pg, d);
    let mut cycle_nodes = d
        .components
        .iter()
        .flat_map(|c| c.cycle.iter())
        .map(|&u| codes[u as usize].as_str());
    match cycle_nodes.next() {
        None => true,
        Some(first) => cycle_nodes.all(|c| c == first),
    }
}

/// Edge rendering for [`export_dot`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DotStyle {
    /// One directed edge x -> x^a per node.
    Directed,
    /// One undirected edge x -- x^a per node; mutual pairs therefore show up
    /// as doubled edges, matching the multigraph view.
    UndirectedMultigraph,
}

/// Writes the graph in DOT: node lines 0..n in order, then one edge per
/// node in order. Byte-identical across runs.
pub fn export_dot(
    pg: &PowerGraph,
    d: &Decomposition,
    style: DotStyle,
    w: &mut impl Write,
) -> io::Result<()> {
    let keyword = match style {
        DotStyle::Directed => "digraph",
        DotStyle::UndirectedMultigraph => "graph",
    };
    writeln!(w, "{keyword} power_map {{")?;
    writeln!(
        w,
        "  // group {}, exponent {}",
        pg.group_name, pg.exponent
    )?;
    writeln!(
        w,
        "  // components: {}, cycle lengths: {:?}",
        d.component_count(),
        d.cycle_lengths()
    )?;
    for x in 0..pg.succ.len() {
        writeln!(w, "  {x};")?;
    }
    for (x, &y) in pg.succ.iter().enumerate() {
        match style {
            DotStyle::Directed => writeln!(w, "  {x} -> {y};")?,
            DotStyle::UndirectedMultigraph => writeln!(w, "  {x} -- {y};")?,
        }
    }
    writeln!(w, "}}")
}
