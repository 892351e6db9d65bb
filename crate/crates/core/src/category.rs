//! Finite categories as hom-set count matrices, plus the special shapes
//! built from groupoids and directed graphs.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactmath::{char_poly, Poly, Rational};

/// `entries[i][j]` counts the morphisms from object `i` to object `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdjacencyMatrix {
    entries: Vec<Vec<u64>>,
}

impl AdjacencyMatrix {
    /// Checks shape, signs and identities on a raw integer matrix.
    pub fn validate(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut entries = Vec::with_capacity(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    row: i,
                    len: row.len(),
                });
            }
            let mut out = Vec::with_capacity(n);
            for (j, &x) in row.iter().enumerate() {
                if x < 0 {
                    return Err(Error::InvalidCategoryMatrix {
                        row: i,
                        col: j,
                        reason: "negative entry",
                    });
                }
                if i == j && x == 0 {
                    return Err(Error::InvalidCategoryMatrix {
                        row: i,
                        col: j,
                        reason: "missing identity morphism",
                    });
                }
                out.push(x as u64);
            }
            entries.push(out);
        }
        Ok(Self { entries })
    }

    /// Same checks as [`validate`](Self::validate) for already unsigned data.
    pub fn from_entries(entries: Vec<Vec<u64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    row: i,
                    len: row.len(),
                });
            }
            if row[i] == 0 {
                return Err(Error::InvalidCategoryMatrix {
                    row: i,
                    col: i,
                    reason: "missing identity morphism",
                });
            }
        }
        Ok(Self { entries })
    }

    /// Number of objects.
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i][j]
    }

    pub fn to_rational(&self) -> Vec<Vec<Rational>> {
        self.entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| Rational::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect()
    }

    pub fn to_bigint(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// `A − E` over the rationals.
    pub fn nondegenerate_part(&self) -> Vec<Vec<Rational>> {
        let mut m = self.to_rational();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] -= Rational::from_integer(BigInt::from(1));
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let n = self.n();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| self.entries[j][i]).collect())
            .collect();
        Self { entries }
    }

    /// `det(λE − A)`.
    pub fn char_poly(&self) -> Poly {
        char_poly(&self.to_rational())
    }

    pub fn row_sums(&self) -> Vec<u64> {
        self.entries.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn column_sums(&self) -> Vec<u64> {
        (0..self.n())
            .map(|j| self.entries.iter().map(|r| r[j]).sum())
            .collect()
    }

    /// Splits a block-diagonal matrix into its connected blocks, if there is more than one.
    pub fn diagonal_blocks(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut blocks = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(i) = stack.pop() {
                members.push(i);
                for j in 0..n {
                    if comp[j] == usize::MAX && (self.entries[i][j] != 0 || self.entries[j][i] != 0)
                    {
                        comp[j] = id;
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            blocks.push(members);
        }
        blocks
    }

    /// The full subcategory on `objects`, in the given order.
    pub fn restrict(&self, objects: &[usize]) -> Self {
        let entries = objects
            .iter()
            .map(|&i| objects.iter().map(|&j| self.entries[i][j]).collect())
            .collect();
        Self { entries }
    }
}

impl fmt::Display for AdjacencyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// A groupoid up to equivalence: one `(object count, automorphism order)` per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidSpec {
    components: Vec<(u64, u64)>,
}

impl GroupoidSpec {
    pub fn new(components: Vec<(u64, u64)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(i) = components.iter().position(|&(n, o)| n == 0 || o == 0) {
            return Err(Error::InvalidGroupoid(i));
        }
        Ok(Self { components })
    }

    pub fn connected(n: u64, o: u64) -> Result<Self> {
        Self::new(vec![(n, o)])
    }

    pub fn components(&self) -> &[(u64, u64)] {
        &self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn object_count(&self) -> u64 {
        self.components.iter().map(|c| c.0).sum()
    }
}

/// Block-diagonal matrix with an `n_i × n_i` block of `o_i`s per component.
pub fn groupoid_adjacency(g: &GroupoidSpec) -> AdjacencyMatrix {
    let blocks: Vec<AdjacencyMatrix> = g
        .components
        .iter()
        .map(|&(n, o)| {
            let n = n as usize;
            AdjacencyMatrix {
                entries: vec![vec![o; n]; n],
            }
        })
        .collect();
    disjoint_union(&blocks)
}

/// Diagonal all ones and no directed cycle among the off-diagonal support.
pub fn is_acyclic_category(a: &AdjacencyMatrix) -> bool {
    let n = a.n();
    if (0..n).any(|i| a.get(i, i) != 1) {
        return false;
    }
    let support: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { 0 } else { a.get(i, j) })
                .collect()
        })
        .collect();
    topological_order(&support).is_ok()
}

/// Kahn's algorithm. On failure returns a vertex lying on a cycle.
fn topological_order(arcs: &[Vec<u64>]) -> std::result::Result<Vec<usize>, usize> {
    let n = arcs.len();
    let mut indeg: Vec<usize> = (0..n)
        .map(|j| (0..n).filter(|&i| arcs[i][j] > 0).count())
        .collect();
    let mut queue: Vec<usize> = (0..n).filter(|&j| indeg[j] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(i) = queue.pop() {
        order.push(i);
        for j in 0..n {
            if arcs[i][j] > 0 {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    queue.push(j);
                }
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        Err((0..n).find(|&j| indeg[j] > 0).unwrap_or(0))
    }
}

/// Finite directed multigraph; `arcs[i][j]` parallel arcs from `i` to `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    arcs: Vec<Vec<u64>>,
}

impl Digraph {
    /// Loop-free digraph.
    pub fn new(arcs: Vec<Vec<u64>>) -> Result<Self> {
        let d = Self::with_loops(arcs)?;
        if let Some(i) = (0..d.v()).find(|&i| d.arcs[i][i] != 0) {
            return Err(Error::LoopInDigraph(i));
        }
        Ok(d)
    }

    /// Allows loops; only [`graph_zeta`](crate::zeta::graph_zeta) accepts these.
    pub fn with_loops(arcs: Vec<Vec<u64>>) -> Result<Self> {
        let v = arcs.len();
        if v == 0 {
            return Err(Error::Empty);
        }
        if let Some((i, r)) = arcs.iter().enumerate().find(|(_, r)| r.len() != v) {
            return Err(Error::NotSquare {
                rows: v,
                row: i,
                len: r.len(),
            });
        }
        Ok(Self { arcs })
    }

    /// Builds from `(source, target, count)` triples.
    pub fn from_arc_list(
        v: usize,
        list: &[(usize, usize, u64)],
        allow_loops: bool,
    ) -> Result<Self> {
        let mut arcs = vec![vec![0u64; v]; v];
        for &(i, j, c) in list {
            if i >= v || j >= v {
                return Err(Error::WrongDimension {
                    expected: v,
                    got: i.max(j) + 1,
                });
            }
            arcs[i][j] = arcs[i][j].checked_add(c).ok_or(Error::Overflow)?;
        }
        if allow_loops {
            Self::with_loops(arcs)
        } else {
            Self::new(arcs)
        }
    }

    pub fn v(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Vec<u64>] {
        &self.arcs
    }

    pub fn is_acyclic(&self) -> bool {
        topological_order(&self.arcs).is_ok()
    }
}

/// Path category of a DAG: `(E − arcs)^{-1} = Σ arcs^m`.
pub fn free_category(d: &Digraph) -> Result<AdjacencyMatrix> {
    let order = topological_order(&d.arcs).map_err(Error::CyclicDigraph)?;
    let v = d.v();
    // paths[i][j] over reverse topological order of j's predecessors
    let mut paths = vec![vec![0u64; v]; v];
    for &i in order.iter().rev() {
        paths[i][i] = 1;
        for k in 0..v {
            let a = d.arcs[i][k];
            if a == 0 {
                continue;
            }
            for j in 0..v {
                let add = a.checked_mul(paths[k][j]).ok_or(Error::Overflow)?;
                paths[i][j] = paths[i][j].checked_add(add).ok_or(Error::Overflow)?;
            }
        }
    }
    Ok(AdjacencyMatrix { entries: paths })
}

/// Coproduct: block-diagonal assembly in list order.
pub fn disjoint_union(parts: &[AdjacencyMatrix]) -> AdjacencyMatrix {
    let n: usize = parts.iter().map(|p| p.n()).sum();
    let mut entries = vec![vec![0u64; n]; n];
    let mut off = 0;
    for p in parts {
        for i in 0..p.n() {
            for j in 0..p.n() {
                entries[off + i][off + j] = p.get(i, j);
            }
        }
        off += p.n();
    }
    AdjacencyMatrix { entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> AdjacencyMatrix {
        AdjacencyMatrix::validate(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(m(&[&[1]]).n(), 1);
        assert_eq!(m(&[&[2, 3, 5], &[2, 3, 5], &[2, 1, 3]]).n(), 3);
        let err = AdjacencyMatrix::validate(&[vec![0, 1], vec![0, 1]]).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidCategoryMatrix {
                row: 0,
                col: 0,
                reason: "missing identity morphism"
            }
        );
        assert!(matches!(
            AdjacencyMatrix::validate(&[vec![1, -1], vec![0, 1]]),
            Err(Error::InvalidCategoryMatrix { row: 0, col: 1, .. })
        ));
        assert!(matches!(
            AdjacencyMatrix::validate(&[vec![1, 0], vec![1]]),
            Err(Error::NotSquare { .. })
        ));
        assert_eq!(AdjacencyMatrix::validate(&[]), Err(Error::Empty));
    }

    #[test]
    fn groupoid_examples() {
        let g = |c: Vec<(u64, u64)>| groupoid_adjacency(&GroupoidSpec::new(c).unwrap());
        assert_eq!(g(vec![(1, 1)]), m(&[&[1]]));
        assert_eq!(g(vec![(2, 3)]), m(&[&[3, 3], &[3, 3]]));
        assert_eq!(
            g(vec![(1, 2), (2, 1)]),
            m(&[&[2, 0, 0], &[0, 1, 1], &[0, 1, 1]])
        );
        assert_eq!(
            GroupoidSpec::new(vec![(1, 0)]),
            Err(Error::InvalidGroupoid(0))
        );
    }

    #[test]
    fn acyclic_examples() {
        assert!(is_acyclic_category(&m(&[&[1, 1], &[0, 1]])));
        assert!(!is_acyclic_category(&m(&[&[1, 1], &[1, 1]])));
        assert!(!is_acyclic_category(&m(&[
            &[2, 2, 2],
            &[2, 2, 2],
            &[2, 8, 5]
        ])));
        // lower triangular is fine after permutation
        assert!(is_acyclic_category(&m(&[
            &[1, 0, 0],
            &[4, 1, 0],
            &[1, 2, 1]
        ])));
    }

    #[test]
    fn free_category_examples() {
        let arc = Digraph::from_arc_list(2, &[(0, 1, 1)], false).unwrap();
        assert_eq!(free_category(&arc).unwrap(), m(&[&[1, 1], &[0, 1]]));

        let shortcut =
            Digraph::from_arc_list(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)], false).unwrap();
        assert_eq!(
            free_category(&shortcut).unwrap(),
            m(&[&[1, 1, 2], &[0, 1, 1], &[0, 0, 1]])
        );

        let cycle = Digraph::from_arc_list(2, &[(0, 1, 1), (1, 0, 1)], false).unwrap();
        assert!(matches!(
            free_category(&cycle),
            Err(Error::CyclicDigraph(_))
        ));

        assert_eq!(Digraph::new(vec![vec![1]]), Err(Error::LoopInDigraph(0)));
    }

    #[test]
    fn free_category_counts_parallel_paths() {
        let d = Digraph::from_arc_list(3, &[(0, 1, 2), (1, 2, 3)], false).unwrap();
        assert_eq!(free_category(&d).unwrap().get(0, 2), 6);
    }

    #[test]
    fn disjoint_union_examples() {
        let one = m(&[&[1]]);
        assert_eq!(disjoint_union(&[one.clone(), one]), m(&[&[1, 0], &[0, 1]]));
        let u = disjoint_union(&[m(&[&[1, 1], &[0, 1]]), m(&[&[2]])]);
        assert_eq!(u, m(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 2]]));
        assert_eq!(u.diagonal_blocks(), vec![vec![0, 1], vec![2]]);

        let parts: Vec<_> = [(1u64, 2u64), (2, 1)]
            .iter()
            .map(|&c| groupoid_adjacency(&GroupoidSpec::new(vec![c]).unwrap()))
            .collect();
        let merged = groupoid_adjacency(&GroupoidSpec::new(vec![(1, 2), (2, 1)]).unwrap());
        assert_eq!(disjoint_union(&parts), merged);
    }

    #[test]
    fn transpose_and_sums() {
        let a = m(&[&[1, 2], &[0, 3]]);
        assert_eq!(a.transpose(), m(&[&[1, 0], &[2, 3]]));
        assert_eq!(a.row_sums(), vec![3, 3]);
        assert_eq!(a.column_sums(), vec![1, 5]);
        assert_eq!(a.to_string(), "[[1,2],[0,3]]");
    }
}
