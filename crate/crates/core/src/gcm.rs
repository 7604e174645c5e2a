//! Generalized Cartan matrices, their Coxeter matrices, and type classification.
//!
//! Classification is by matching each connected component of the Coxeter
//! diagram against the complete catalogues of connected finite and affine
//! Coxeter diagrams (Bourbaki, *Groupes et algèbres de Lie*, ch. VI, §4, and
//! Humphreys, *Reflection Groups and Coxeter Groups*, §2.7 and §4.7).
//! Anything outside both catalogues is indefinite.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, GcmViolation, Result};

/// Order of a product of two reflections, or of `st` in a Coxeter matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }

    /// Order of `r s` for two reflections whose Cartan product is `k`.
    pub fn from_cartan_product(k: i128) -> Order {
        match k {
            0 => Order::Finite(2),
            1 => Order::Finite(3),
            2 => Order::Finite(4),
            3 => Order::Finite(6),
            _ => Order::Infinite,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(m) => write!(f, "{m}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Order::Finite(m) => s.serialize_u32(*m),
            Order::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Order {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(m) => Ok(Order::Finite(m)),
            Raw::Str(s) if s == "inf" || s == "infinity" || s == "∞" => Ok(Order::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("expected a positive integer or \"inf\", got {s:?}"))),
        }
    }
}

/// A validated generalized Cartan matrix; `a[i][j] = <alpha_j, alpha_i^vee>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedCartanMatrix {
    n: usize,
    a: Vec<i64>,
}

impl GeneralizedCartanMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        validate_gcm(&rows)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.a.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// A crystallographic realization of a Coxeter matrix whose entries all
    /// lie in {2, 3, 4, 6, inf}.
    pub fn realize(cox: &CoxeterMatrix) -> Result<Self> {
        let n = cox.size();
        let mut rows = vec![vec![0i64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 2;
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let (x, y) = match cox.entry(i, j) {
                    Order::Finite(2) => (0, 0),
                    Order::Finite(3) => (-1, -1),
                    Order::Finite(4) => (-1, -2),
                    Order::Finite(6) => (-1, -3),
                    Order::Infinite => (-2, -2),
                    Order::Finite(m) => return Err(Error::NotCrystallographic(m)),
                };
                rows[i][j] = x;
                rows[j][i] = y;
            }
        }
        validate_gcm(&rows)
    }
}

impl fmt::Display for GeneralizedCartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

pub fn validate_gcm(rows: &[Vec<i64>]) -> Result<GeneralizedCartanMatrix> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::NotGcm(GcmViolation::Empty));
    }
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::NotGcm(GcmViolation::NotSquare));
    }
    for (i, row) in rows.iter().enumerate() {
        if row[i] != 2 {
            return Err(Error::NotGcm(GcmViolation::Diagonal { index: i, value: row[i] }));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if rows[i][j] > 0 {
                return Err(Error::NotGcm(GcmViolation::PositiveOffDiagonal { row: i, col: j, value: rows[i][j] }));
            }
            if (rows[i][j] == 0) != (rows[j][i] == 0) {
                let (row, col) = if rows[i][j] == 0 { (i, j) } else { (j, i) };
                return Err(Error::NotGcm(GcmViolation::ZeroAsymmetry { row, col }));
            }
        }
    }
    Ok(GeneralizedCartanMatrix { n, a: rows.iter().flatten().copied().collect() })
}

/// Coxeter matrix `(m_st)` of a Coxeter system `(W, S)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    n: usize,
    m: Vec<Order>,
}

impl CoxeterMatrix {
    pub fn new(rows: Vec<Vec<Order>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidCoxeter("matrix is empty".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCoxeter("matrix is not square".into()));
        }
        for i in 0..n {
            if rows[i][i] != Order::Finite(1) {
                return Err(Error::InvalidCoxeter(format!("m[{i}][{i}] must be 1")));
            }
            for j in 0..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::InvalidCoxeter(format!("m[{i}][{j}] != m[{j}][{i}]")));
                }
                if i != j {
                    if let Order::Finite(m) = rows[i][j] {
                        if m < 2 {
                            return Err(Error::InvalidCoxeter(format!(
                                "m[{i}][{j}] = {m}, off-diagonal entries must be >= 2"
                            )));
                        }
                    }
                }
            }
        }
        Ok(CoxeterMatrix { n, m: rows.into_iter().flatten().collect() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn entry(&self, s: usize, t: usize) -> Order {
        self.m[s * self.n + t]
    }

    pub fn rows(&self) -> Vec<Vec<Order>> {
        self.m.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Restriction to the parabolic subsystem on `subset` (in the given order).
    pub fn restrict(&self, subset: &[usize]) -> CoxeterMatrix {
        let m =
            subset.iter().flat_map(|&s| subset.iter().map(move |&t| (s, t))).map(|(s, t)| self.entry(s, t)).collect();
        CoxeterMatrix { n: subset.len(), m }
    }

    pub fn is_crystallographic(&self) -> bool {
        self.m.iter().all(|o| matches!(o, Order::Finite(1 | 2 | 3 | 4 | 6) | Order::Infinite))
    }

    /// Simultaneous row/column permutation: entry `(i, j)` of the result is
    /// entry `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> CoxeterMatrix {
        self.restrict(perm)
    }
}

/// Coxeter matrix of the Weyl group of a GCM: `a_st a_ts` = 0, 1, 2, 3, >=4
/// gives `m_st` = 2, 3, 4, 6, infinity.
pub fn coxeter_of(gcm: &GeneralizedCartanMatrix) -> CoxeterMatrix {
    let n = gcm.size();
    let mut m = Vec::with_capacity(n * n);
    for s in 0..n {
        for t in 0..n {
            if s == t {
                m.push(Order::Finite(1));
            } else {
                let k = gcm.entry(s, t) as i128 * gcm.entry(t, s) as i128;
                m.push(Order::from_cartan_product(k));
            }
        }
    }
    CoxeterMatrix { n, m }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
    H3,
    H4,
    /// Dihedral of order `2m`, used for m = 5 and m >= 7.
    I2(u32),
}

impl FiniteType {
    pub fn rank(self) -> usize {
        match self {
            FiniteType::A(n) | FiniteType::B(n) | FiniteType::D(n) => n,
            FiniteType::E6 => 6,
            FiniteType::E7 => 7,
            FiniteType::E8 => 8,
            FiniteType::F4 => 4,
            FiniteType::G2 | FiniteType::I2(_) => 2,
            FiniteType::H3 => 3,
            FiniteType::H4 => 4,
        }
    }

    /// Degrees of the basic invariants; the Poincaré polynomial is
    /// `prod_i (1 + t + ... + t^(d_i - 1))`.
    pub fn degrees(self) -> Vec<u32> {
        match self {
            FiniteType::A(n) => (2..=n as u32 + 1).collect(),
            FiniteType::B(n) => (1..=n as u32).map(|i| 2 * i).collect(),
            FiniteType::D(n) => {
                let mut d: Vec<u32> = (1..n as u32).map(|i| 2 * i).collect();
                d.push(n as u32);
                d.sort_unstable();
                d
            }
            FiniteType::E6 => vec![2, 5, 6, 8, 9, 12],
            FiniteType::E7 => vec![2, 6, 8, 10, 12, 14, 18],
            FiniteType::E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
            FiniteType::F4 => vec![2, 6, 8, 12],
            FiniteType::G2 => vec![2, 6],
            FiniteType::H3 => vec![2, 6, 10],
            FiniteType::H4 => vec![2, 12, 20, 30],
            FiniteType::I2(m) => vec![2, m],
        }
    }

    fn dihedral(m: u32) -> FiniteType {
        match m {
            3 => FiniteType::A(2),
            4 => FiniteType::B(2),
            6 => FiniteType::G2,
            m => FiniteType::I2(m),
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E6 => write!(f, "E6"),
            FiniteType::E7 => write!(f, "E7"),
            FiniteType::E8 => write!(f, "E8"),
            FiniteType::F4 => write!(f, "F4"),
            FiniteType::G2 => write!(f, "G2"),
            FiniteType::H3 => write!(f, "H3"),
            FiniteType::H4 => write!(f, "H4"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// Irreducible affine Coxeter types, indexed by the rank of the underlying
/// finite type (so the diagram has `n + 1` nodes).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffineType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl AffineType {
    /// Number of generators (diagram nodes).
    pub fn node_count(self) -> usize {
        match self {
            AffineType::A(n) | AffineType::B(n) | AffineType::C(n) | AffineType::D(n) => n + 1,
            AffineType::E6 => 7,
            AffineType::E7 => 8,
            AffineType::E8 => 9,
            AffineType::F4 => 5,
            AffineType::G2 => 3,
        }
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineType::A(n) => write!(f, "A~{n}"),
            AffineType::B(n) => write!(f, "B~{n}"),
            AffineType::C(n) => write!(f, "C~{n}"),
            AffineType::D(n) => write!(f, "D~{n}"),
            AffineType::E6 => write!(f, "E~6"),
            AffineType::E7 => write!(f, "E~7"),
            AffineType::E8 => write!(f, "E~8"),
            AffineType::F4 => write!(f, "F~4"),
            AffineType::G2 => write!(f, "G~2"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentType {
    Spherical(FiniteType),
    Affine(AffineType),
    Indefinite,
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentType::Spherical(t) => write!(f, "spherical:{t}"),
            ComponentType::Affine(t) => write!(f, "affine:{t}"),
            ComponentType::Indefinite => write!(f, "indefinite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Generator indices of the component, ascending.
    pub indices: Vec<usize>,
    pub kind: ComponentType,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeClassification {
    /// Ordered by smallest index.
    pub components: Vec<Component>,
    pub irreducible: bool,
    pub infinite: bool,
}

impl TypeClassification {
    pub fn is_spherical(&self) -> bool {
        !self.infinite
    }

    /// Some component is neither spherical nor affine.
    pub fn has_indefinite_component(&self) -> bool {
        self.components.iter().any(|c| c.kind == ComponentType::Indefinite)
    }

    /// The hypothesis "irreducible, infinite and non-affine".
    pub fn is_irreducible_indefinite(&self) -> bool {
        self.irreducible && self.components[0].kind == ComponentType::Indefinite
    }

    /// Short label: the component type for irreducible systems, otherwise
    /// the component labels joined by `x`.
    pub fn label(&self) -> String {
        self.components.iter().map(|c| c.kind.to_string()).collect::<Vec<_>>().join(" x ")
    }

    pub fn finite_types(&self) -> Option<Vec<FiniteType>> {
        self.components
            .iter()
            .map(|c| match c.kind {
                ComponentType::Spherical(t) => Some(t),
                _ => None,
            })
            .collect()
    }
}

pub fn classify(cox: &CoxeterMatrix) -> TypeClassification {
    let components: Vec<Component> = connected_components(cox)
        .into_iter()
        .map(|indices| {
            let kind = classify_connected(&cox.restrict(&indices));
            Component { indices, kind }
        })
        .collect();
    let irreducible = components.len() == 1;
    let infinite = components.iter().any(|c| !matches!(c.kind, ComponentType::Spherical(_)));
    TypeClassification { components, irreducible, infinite }
}

/// True iff `W` is finite; cheaper than a full classification when only
/// sphericity matters.
pub fn is_spherical(cox: &CoxeterMatrix) -> bool {
    connected_components(cox)
        .into_iter()
        .all(|c| matches!(classify_connected(&cox.restrict(&c)), ComponentType::Spherical(_)))
}

fn connected_components(cox: &CoxeterMatrix) -> Vec<Vec<usize>> {
    let n = cox.size();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let s = comp[k];
            for t in 0..n {
                if !seen[t] && t != s && cox.entry(s, t) != Order::Finite(2) {
                    seen[t] = true;
                    comp.push(t);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Edge label of the diagram: `None` for infinity.
type Label = Option<u32>;

struct Diagram {
    n: usize,
    adj: Vec<Vec<(usize, Label)>>,
    edges: Vec<(usize, usize, Label)>,
}

impl Diagram {
    fn of(cox: &CoxeterMatrix) -> Diagram {
        let n = cox.size();
        let mut adj = vec![Vec::new(); n];
        let mut edges = Vec::new();
        for s in 0..n {
            for t in (s + 1)..n {
                let label = match cox.entry(s, t) {
                    Order::Finite(2) => continue,
                    Order::Finite(m) => Some(m),
                    Order::Infinite => None,
                };
                adj[s].push((t, label));
                adj[t].push((s, label));
                edges.push((s, t, label));
            }
        }
        Diagram { n, adj, edges }
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Walk from `from` away from `prev` along a chain of degree-2 nodes;
    /// returns the labels met, in order.
    fn arm(&self, prev: usize, from: usize, first: Label) -> Vec<Label> {
        let mut labels = vec![first];
        let (mut p, mut v) = (prev, from);
        while self.degree(v) == 2 {
            let &(w, l) = self.adj[v].iter().find(|&&(w, _)| w != p).unwrap();
            labels.push(l);
            p = v;
            v = w;
        }
        labels
    }

    /// Labels along a path diagram, end to end.
    fn path_labels(&self) -> Vec<Label> {
        let end = (0..self.n).find(|&v| self.degree(v) == 1).unwrap();
        let (next, l) = self.adj[end][0];
        self.arm(end, next, l)
    }
}

fn classify_connected(cox: &CoxeterMatrix) -> ComponentType {
    use ComponentType::*;
    let d = Diagram::of(cox);
    let n = d.n;
    if n == 1 {
        return Spherical(FiniteType::A(1));
    }
    if d.edges.iter().any(|e| e.2.is_none()) {
        return if n == 2 { Affine(AffineType::A(1)) } else { Indefinite };
    }
    if n == 2 {
        return Spherical(FiniteType::dihedral(d.edges[0].2.unwrap()));
    }
    let labels: Vec<u32> = d.edges.iter().map(|e| e.2.unwrap()).collect();
    if d.edges.len() == n {
        // a single cycle
        let pure_cycle = (0..n).all(|v| d.degree(v) == 2);
        return if pure_cycle && labels.iter().all(|&m| m == 3) { Affine(AffineType::A(n - 1)) } else { Indefinite };
    }
    if d.edges.len() > n {
        return Indefinite;
    }
    // tree
    let branch: Vec<usize> = (0..n).filter(|&v| d.degree(v) >= 3).collect();
    let heavy = labels.iter().filter(|&&m| m > 3).count();
    match (heavy, branch.len()) {
        (0, 0) => Spherical(FiniteType::A(n)),
        (0, 1) => {
            let c = branch[0];
            let mut legs: Vec<usize> = d.adj[c].iter().map(|&(v, l)| d.arm(c, v, l).len()).collect();
            legs.sort_unstable();
            match legs.as_slice() {
                [1, 1, k] => Spherical(FiniteType::D(k + 3)),
                [1, 2, 2] => Spherical(FiniteType::E6),
                [1, 2, 3] => Spherical(FiniteType::E7),
                [1, 2, 4] => Spherical(FiniteType::E8),
                [2, 2, 2] => Affine(AffineType::E6),
                [1, 3, 3] => Affine(AffineType::E7),
                [1, 2, 5] => Affine(AffineType::E8),
                [1, 1, 1, 1] => Affine(AffineType::D(4)),
                _ => Indefinite,
            }
        }
        (0, 2) => {
            let forked = branch
                .iter()
                .all(|&c| d.degree(c) == 3 && d.adj[c].iter().filter(|&&(v, _)| d.degree(v) == 1).count() == 2);
            if forked {
                Affine(AffineType::D(n - 1))
            } else {
                Indefinite
            }
        }
        (1, 0) => {
            let path = d.path_labels();
            let pos = path.iter().position(|&l| l.unwrap() > 3).unwrap();
            let at_end = pos == 0 || pos == path.len() - 1;
            match path[pos].unwrap() {
                4 if at_end => Spherical(FiniteType::B(n)),
                4 if n == 4 => Spherical(FiniteType::F4),
                4 if n == 5 => Affine(AffineType::F4),
                5 if at_end && n == 3 => Spherical(FiniteType::H3),
                5 if at_end && n == 4 => Spherical(FiniteType::H4),
                6 if at_end && n == 3 => Affine(AffineType::G2),
                _ => Indefinite,
            }
        }
        (1, 1) => {
            let c = branch[0];
            if d.degree(c) != 3 {
                return Indefinite;
            }
            let mut arms: Vec<Vec<Label>> = d.adj[c].iter().map(|&(v, l)| d.arm(c, v, l)).collect();
            arms.sort_by_key(|a| (a.len(), a.iter().any(|&l| l != Some(3))));
            let short = arms[0].len() == 1 && arms[1].len() == 1;
            let long = &arms[2];
            let tail_is_four = long.last() == Some(&Some(4)) && long[..long.len() - 1].iter().all(|&l| l == Some(3));
            if short && arms[0][0] == Some(3) && arms[1][0] == Some(3) && tail_is_four {
                Affine(AffineType::B(n - 1))
            } else {
                Indefinite
            }
        }
        (2, 0) => {
            let path = d.path_labels();
            let k = path.len();
            if path[0] == Some(4) && path[k - 1] == Some(4) {
                Affine(AffineType::C(n - 1))
            } else {
                Indefinite
            }
        }
        _ => Indefinite,
    }
}

/// 2-sphericity together with the rank-2 pairs `(s, t)` that are critical
/// for the given field size, i.e. `(m_st, q)` in {(4,2), (6,2), (6,3), (8,2)}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoSphericity {
    pub two_spherical: bool,
    pub critical_pairs: Vec<(usize, usize)>,
}

pub fn is_two_spherical(cox: &CoxeterMatrix, q: Option<u64>) -> TwoSphericity {
    let n = cox.size();
    let mut two_spherical = true;
    let mut critical_pairs = Vec::new();
    for s in 0..n {
        for t in (s + 1)..n {
            match cox.entry(s, t) {
                Order::Infinite => two_spherical = false,
                Order::Finite(m) => {
                    if matches!((m, q), (4, Some(2)) | (6, Some(2)) | (6, Some(3)) | (8, Some(2))) {
                        critical_pairs.push((s, t));
                    }
                }
            }
        }
    }
    TwoSphericity { two_spherical, critical_pairs }
}

pub fn is_simply_laced(cox: &CoxeterMatrix) -> bool {
    let n = cox.size();
    (0..n).all(|s| (0..n).all(|t| s == t || matches!(cox.entry(s, t), Order::Finite(2 | 3))))
}
