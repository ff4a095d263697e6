use num_integer::Integer;
use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::linalg::{incidence, perron_root, AlgebraicNumber, IntMatrix};
use crate::words::{D0LSystem, Letter};

/// Edge `a -> b` iff `b` occurs in `σ(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependencyGraph {
    successors: Vec<Vec<usize>>,
}

impl DependencyGraph {
    pub fn dim(&self) -> usize {
        self.successors.len()
    }

    pub fn successors(&self, a: Letter) -> impl Iterator<Item = Letter> + '_ {
        self.successors[a.index()].iter().map(|&b| Letter(b as u32))
    }

    pub fn has_edge(&self, a: Letter, b: Letter) -> bool {
        self.successors[a.index()].binary_search(&b.index()).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Letter, Letter)> + '_ {
        self.successors
            .iter()
            .enumerate()
            .flat_map(|(a, succ)| succ.iter().map(move |&b| (Letter(a as u32), Letter(b as u32))))
    }

    /// Letters reachable from `start` in zero or more steps.
    pub fn reachable_from(&self, start: impl IntoIterator<Item = Letter>) -> Vec<bool> {
        let mut seen = vec![false; self.dim()];
        let mut stack: Vec<usize> = Vec::new();
        for l in start {
            if !seen[l.index()] {
                seen[l.index()] = true;
                stack.push(l.index());
            }
        }
        while let Some(u) = stack.pop() {
            for &v in &self.successors[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Strongly connected components in topological order (an edge between
    /// two components always goes from an earlier to a later one). Letters
    /// inside a component are sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut g = DiGraph::<(), ()>::with_capacity(self.dim(), 0);
        let nodes: Vec<NodeIndex> = (0..self.dim()).map(|_| g.add_node(())).collect();
        for (a, succ) in self.successors.iter().enumerate() {
            for &b in succ {
                g.add_edge(nodes[a], nodes[b], ());
            }
        }
        // tarjan_scc yields sinks first.
        let mut comps: Vec<Vec<usize>> = tarjan_scc(&g)
            .into_iter()
            .map(|c| {
                let mut v: Vec<usize> = c.into_iter().map(NodeIndex::index).collect();
                v.sort_unstable();
                v
            })
            .collect();
        comps.reverse();
        comps
    }

    /// gcd of cycle lengths inside the component `comp` (0 when it carries
    /// no cycle). Uses BFS levels from one root: every intra-component edge
    /// `u -> v` contributes `level(u) + 1 − level(v)`.
    pub fn component_period(&self, comp: &[usize]) -> u64 {
        let Some(&root) = comp.first() else {
            return 0;
        };
        let mut member = vec![false; self.dim()];
        for &v in comp {
            member[v] = true;
        }
        let mut level: Vec<Option<i64>> = vec![None; self.dim()];
        level[root] = Some(0);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let lu = level[u].unwrap();
            for &v in &self.successors[u] {
                if member[v] && level[v].is_none() {
                    level[v] = Some(lu + 1);
                    queue.push_back(v);
                }
            }
        }
        let mut g: i64 = 0;
        for &u in comp {
            for &v in &self.successors[u] {
                if member[v] {
                    g = g.gcd(&(level[u].unwrap() + 1 - level[v].unwrap()));
                }
            }
        }
        g.unsigned_abs()
    }
}

pub fn dependency_graph(s: &D0LSystem) -> DependencyGraph {
    let successors = s
        .morphism()
        .images()
        .iter()
        .map(|img| {
            let mut v: Vec<usize> = img.letters().iter().map(|l| l.index()).collect();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    DependencyGraph { successors }
}

/// One strongly connected component of the dependency graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub letters: Vec<Letter>,
    /// A single letter without a self-loop.
    pub is_trivial: bool,
    pub perron: AlgebraicNumber,
    pub period: u64,
}

/// Condensation of the dependency graph, components in topological order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    pub components: Vec<Component>,
    pub component_of: Vec<usize>,
    /// Deduplicated condensation edges, `dag[i]` sorted, always `i < j`.
    pub dag: Vec<Vec<usize>>,
}

impl SccDecomposition {
    pub fn component(&self, a: Letter) -> &Component {
        &self.components[self.component_of[a.index()]]
    }
}

/// SCCs with their Perron roots (from principal submatrices of `incidence`)
/// and periods.
pub fn scc_condensation(g: &DependencyGraph, incidence: &IntMatrix) -> SccDecomposition {
    assert_eq!(g.dim(), incidence.dim(), "graph and incidence matrix disagree");
    let comps = g.components();
    let mut component_of = vec![0; g.dim()];
    for (ci, comp) in comps.iter().enumerate() {
        for &v in comp {
            component_of[v] = ci;
        }
    }
    let mut dag = vec![Vec::new(); comps.len()];
    for (a, b) in g.edges() {
        let (ca, cb) = (component_of[a.index()], component_of[b.index()]);
        if ca != cb {
            dag[ca].push(cb);
        }
    }
    for succ in &mut dag {
        succ.sort_unstable();
        succ.dedup();
    }
    let components = comps
        .iter()
        .map(|comp| {
            let is_trivial = comp.len() == 1 && !g.has_edge(Letter(comp[0] as u32), Letter(comp[0] as u32));
            let perron = if is_trivial {
                AlgebraicNumber::zero()
            } else {
                perron_root(&incidence.principal_submatrix(comp)).expect("incidence matrices are nonnegative")
            };
            Component {
                letters: comp.iter().map(|&v| Letter(v as u32)).collect(),
                is_trivial,
                perron,
                period: g.component_period(comp),
            }
        })
        .collect();
    SccDecomposition { components, component_of, dag }
}

/// Convenience: condensation of a system's own graph and incidence matrix.
pub fn condensation(s: &D0LSystem) -> SccDecomposition {
    scc_condensation(&dependency_graph(s), &incidence(s))
}

/// gcd of the positive return times of `a` (0 when `a` lies on no cycle).
pub fn period(s: &D0LSystem, a: Letter) -> u64 {
    let g = dependency_graph(s);
    let comp = g
        .components()
        .into_iter()
        .find(|c| c.contains(&a.index()))
        .expect("letter belongs to the alphabet");
    g.component_period(&comp)
}

/// Every letter occurs in some iterate of every other letter.
pub fn is_irreducible(s: &D0LSystem) -> bool {
    dependency_graph(s).components().len() <= 1
}

/// Irreducible with common period 1.
pub fn is_primitive(s: &D0LSystem) -> bool {
    let g = dependency_graph(s);
    let comps = g.components();
    comps.len() == 1 && g.component_period(&comps[0]) == 1
}

/// Primitivity decided independently of the SCC/period route: the boolean
/// incidence matrix raised to Wielandt's exponent `(d−1)² + 1` is all
/// positive iff the matrix is primitive.
pub fn is_primitive_wielandt(s: &D0LSystem) -> bool {
    let d = s.alphabet().len();
    if d == 0 {
        return false;
    }
    let mut base = vec![vec![false; d]; d];
    for (j, img) in s.morphism().images().iter().enumerate() {
        for l in img.letters() {
            base[l.index()][j] = true;
        }
    }
    let exponent = (d - 1) * (d - 1) + 1;
    bool_pow(&base, exponent).iter().all(|row| row.iter().all(|&x| x))
}

fn bool_mul(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let d = a.len();
    let mut out = vec![vec![false; d]; d];
    for i in 0..d {
        for k in 0..d {
            if a[i][k] {
                for j in 0..d {
                    out[i][j] |= b[k][j];
                }
            }
        }
    }
    out
}

fn bool_pow(m: &[Vec<bool>], mut n: usize) -> Vec<Vec<bool>> {
    let d = m.len();
    let mut result: Vec<Vec<bool>> = (0..d).map(|i| (0..d).map(|j| i == j).collect()).collect();
    let mut base = m.to_vec();
    while n > 0 {
        if n & 1 == 1 {
            result = bool_mul(&result, &base);
        }
        n >>= 1;
        if n > 0 {
            base = bool_mul(&base, &base);
        }
    }
    result
}
