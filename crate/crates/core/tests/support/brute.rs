//! Brute-force enumerators working from raw facet vertex sets.

use std::collections::{BTreeSet, HashSet};

use smallcover::coloring::{CharacteristicMap, Z2Vec};
use smallcover::SimplePolytope3;

/// Facet incidence recomputed from the facet vertex lists only.
pub struct Incidence {
    pub facets: Vec<BTreeSet<usize>>,
}

impl Incidence {
    pub fn new(p: &SimplePolytope3) -> Self {
        Incidence {
            facets: (0..p.facet_count())
                .map(|f| p.facet(f).iter().copied().collect())
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn common(&self, set: &[usize]) -> BTreeSet<usize> {
        let mut out = self.facets[set[0]].clone();
        for &f in &set[1..] {
            out = out.intersection(&self.facets[f]).copied().collect();
        }
        out
    }

    /// Two facets of a simple polytope are adjacent iff they share two vertices.
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        a != b && self.common(&[a, b]).len() >= 2
    }

    pub fn disjoint(&self, a: usize, b: usize) -> bool {
        self.common(&[a, b]).is_empty()
    }

    /// Edges as `(endpoints, facets)` from consecutive vertices of facet cycles.
    pub fn edges(&self, p: &SimplePolytope3) -> Vec<([usize; 2], [usize; 2])> {
        let mut out = BTreeSet::new();
        for f in 0..p.facet_count() {
            let c = p.facet(f);
            for i in 0..c.len() {
                let (x, y) = (c[i], c[(i + 1) % c.len()]);
                let ends = [x.min(y), x.max(y)];
                let owners: Vec<usize> = (0..self.len())
                    .filter(|&g| self.facets[g].contains(&x) && self.facets[g].contains(&y))
                    .collect();
                assert_eq!(owners.len(), 2);
                out.insert((ends, [owners[0], owners[1]]));
            }
        }
        out.into_iter().collect()
    }
}

pub fn canonical(cycle: &[usize]) -> Vec<usize> {
    let n = cycle.len();
    let mut best: Option<Vec<usize>> = None;
    for r in 0..n {
        for dir in [1isize, -1] {
            let v: Vec<usize> = (0..n as isize)
                .map(|i| cycle[((r as isize + dir * i).rem_euclid(n as isize)) as usize])
                .collect();
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
    }
    best.unwrap_or_default()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Cyclic orders of a set, first element fixed, reflections included.
fn cyclic_orders(set: &[usize]) -> Vec<Vec<usize>> {
    permutations(&set[1..])
        .into_iter()
        .map(|mut rest| {
            rest.insert(0, set[0]);
            rest
        })
        .collect()
}

/// All k-belts by trying every k-subset in every cyclic order.
pub fn belts(p: &SimplePolytope3, k: usize) -> BTreeSet<Vec<usize>> {
    let inc = Incidence::new(p);
    let mut out = BTreeSet::new();
    for set in subsets(inc.len(), k) {
        let triple_free = subsets(k, 3)
            .iter()
            .all(|t| inc.common(&[set[t[0]], set[t[1]], set[t[2]]]).is_empty());
        if !triple_free {
            continue;
        }
        for order in cyclic_orders(&set) {
            let cyclic = (0..k).all(|i| inc.adjacent(order[i], order[(i + 1) % k]));
            let opposite = k != 4 || (inc.disjoint(order[0], order[2]) && inc.disjoint(order[1], order[3]));
            if cyclic && opposite {
                out.insert(canonical(&order));
            }
        }
    }
    out
}

/// All prismatic k-circuits, from every k-set of edges with pairwise
/// distinct endpoints in every cyclic order. Returned as canonical facet
/// cycles.
pub fn prismatic_circuits(p: &SimplePolytope3, k: usize) -> BTreeSet<Vec<usize>> {
    let inc = Incidence::new(p);
    let edges = inc.edges(p);
    let mut out = BTreeSet::new();
    for set in subsets(edges.len(), k) {
        let endpoints: HashSet<usize> = set.iter().flat_map(|&e| edges[e].0).collect();
        if endpoints.len() != 2 * k {
            continue;
        }
        for order in cyclic_orders(&set) {
            // Facet between edge i-1 and edge i: the one they share.
            let mut facets = Vec::with_capacity(k);
            for i in 0..k {
                let a = edges[order[(i + k - 1) % k]].1;
                let b = edges[order[i]].1;
                let shared: Vec<usize> = a.iter().copied().filter(|f| b.contains(f)).collect();
                if shared.len() != 1 {
                    break;
                }
                facets.push(shared[0]);
            }
            if facets.len() != k {
                continue;
            }
            let distinct: HashSet<usize> = facets.iter().copied().collect();
            // Edge i separates facets[i] and facets[i+1].
            let crosses = (0..k).all(|i| {
                let [x, y] = edges[order[i]].1;
                let (f, g) = (facets[i], facets[(i + 1) % k]);
                (x, y) == (f.min(g), f.max(g))
            });
            if distinct.len() == k && crosses {
                out.insert(canonical(&facets));
            }
        }
    }
    out
}

fn independent(a: u8, b: u8, c: u8) -> bool {
    a != 0 && b != 0 && c != 0 && a != b && a ^ b != c && c != a && c != b
}

/// Every assignment of nonzero colors, kept when independent at each vertex.
pub fn colorings(p: &SimplePolytope3) -> Vec<Vec<u8>> {
    let inc = Incidence::new(p);
    let n = inc.len();
    let vertices: BTreeSet<Vec<usize>> = (0..p.vertex_count())
        .map(|v| (0..n).filter(|&f| p.facet(f).contains(&v)).collect())
        .collect();
    let vertices: Vec<Vec<usize>> = vertices.into_iter().collect();
    let mut out = Vec::new();
    let total = 7usize.pow(n as u32);
    let mut colors = vec![0u8; n];
    for code in 0..total {
        let mut c = code;
        for slot in colors.iter_mut() {
            *slot = (c % 7) as u8 + 1;
            c /= 7;
        }
        if vertices
            .iter()
            .all(|v| independent(colors[v[0]], colors[v[1]], colors[v[2]]))
        {
            out.push(colors.clone());
        }
    }
    out
}

/// Orbits under the 168 basis changes, by least image.
pub fn coloring_orbits(colorings: &[Vec<u8>]) -> BTreeSet<Vec<u8>> {
    let mut maps = Vec::new();
    for a in 1..8u8 {
        for b in 1..8u8 {
            for c in 1..8u8 {
                if independent(a, b, c) {
                    maps.push([a, b, c]);
                }
            }
        }
    }
    assert_eq!(maps.len(), 168);
    let apply = |m: &[u8; 3], x: u8| (0..3).filter(|k| x >> k & 1 == 1).fold(0, |acc, k| acc ^ m[k]);
    colorings
        .iter()
        .map(|col| {
            maps.iter()
                .map(|m| col.iter().map(|&x| apply(m, x)).collect::<Vec<u8>>())
                .min()
                .expect("nonempty")
        })
        .collect()
}

pub fn to_map(colors: &[u8]) -> CharacteristicMap {
    CharacteristicMap::new(colors.iter().map(|&c| Z2Vec::new(c).expect("3-bit value")).collect())
}

/// Cuts off vertex `v`: a new triangular facet, with a new vertex on each
/// edge at `v`.
pub fn truncate_vertex(p: &SimplePolytope3, v: usize) -> SimplePolytope3 {
    let fresh = p.vertex_count();
    // New vertex on edge v-u, numbered by the neighbour u.
    let mut neighbours: Vec<usize> = Vec::new();
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for f in 0..p.facet_count() {
        let c = p.facet(f);
        let Some(i) = c.iter().position(|&x| x == v) else {
            facets.push(c.to_vec());
            continue;
        };
        let prev = c[(i + c.len() - 1) % c.len()];
        let next = c[(i + 1) % c.len()];
        for u in [prev, next] {
            if !neighbours.contains(&u) {
                neighbours.push(u);
            }
        }
        let id = |u: usize| fresh + neighbours.iter().position(|&x| x == u).expect("recorded");
        let mut out = Vec::with_capacity(c.len() + 1);
        for (j, &x) in c.iter().enumerate() {
            if j == i {
                out.push(id(prev));
                out.push(id(next));
            } else {
                out.push(x);
            }
        }
        facets.push(out);
    }
    assert_eq!(neighbours.len(), 3);
    facets.push((0..3).map(|k| fresh + k).collect());
    SimplePolytope3::from_facets(format!("{}-t{v}", p.name()), facets).expect("truncation stays simple")
}
