//! Generators for the extremal families and evaluators for the closed-form bounds.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_rational::Ratio;
use serde::Serialize;

use crate::graph::Graph;
use crate::hypergraph::{combinations, Hypergraph};
use crate::redblue::{Color, RedBlueGraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("need n >= k, got n = {n}, k = {k}")]
    TooFewVertices { n: usize, k: usize },
    #[error("need k >= 2s, got k = {k}, s = {s}")]
    CoreTooLarge { k: usize, s: usize },
    #[error("invalid parameters: {0}")]
    Invalid(String),
}

/// The hypergraph `H(n, k, r)`: a core `L` of size `floor(k/2) - 1` and all `r`-sets with
/// at least `r - 1` vertices in `L`; for odd `k` also the `r`-sets made of the two
/// parity vertices and `r - 2` vertices of `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalHypergraph {
    pub hypergraph: Hypergraph,
    pub core: Range<usize>,
    pub parity_pair: Option<(usize, usize)>,
    /// Set when `|L| <= r - 2`, where the family has at most one hyperedge and is not extremal.
    pub degenerate: bool,
}

pub fn construct_h(n: usize, k: usize, r: usize) -> Result<ExtremalHypergraph, ConstructionError> {
    if n < k {
        return Err(ConstructionError::TooFewVertices { n, k });
    }
    if k < 4 || r < 3 {
        return Err(ConstructionError::Invalid(format!(
            "need k >= 4 and r >= 3, got k = {k}, r = {r}"
        )));
    }
    let l = k / 2 - 1;
    let mut edges = Vec::new();
    if l >= r {
        edges.extend(combinations(l, r));
    }
    if l + 1 >= r {
        for base in combinations(l, r - 1) {
            for z in l..n {
                let mut e = base.clone();
                e.push(z);
                edges.push(e);
            }
        }
    }
    let parity_pair = (k % 2 == 1).then_some((l, l + 1));
    if let Some((u1, u2)) = parity_pair {
        if l + 2 >= r {
            for base in combinations(l, r - 2) {
                let mut e = base;
                e.push(u1);
                e.push(u2);
                edges.push(e);
            }
        }
    }
    let hypergraph = Hypergraph::new(n, r, edges).expect("generated hyperedges are valid");
    Ok(ExtremalHypergraph {
        hypergraph,
        core: 0..l,
        parity_pair,
        degenerate: l + 2 <= r,
    })
}

/// Part sizes and labels of `W(n, k, s) = K_s + ((n - k + s) K_1 u K_{k - 2s})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WShape {
    pub n: usize,
    pub k: usize,
    pub s: usize,
}

impl WShape {
    pub fn new(n: usize, k: usize, s: usize) -> Result<Self, ConstructionError> {
        if k < 2 * s {
            return Err(ConstructionError::CoreTooLarge { k, s });
        }
        if n < k {
            return Err(ConstructionError::TooFewVertices { n, k });
        }
        if s == 0 {
            return Err(ConstructionError::Invalid("need s >= 1".into()));
        }
        Ok(Self { n, k, s })
    }

    /// The clique joined to everything.
    pub fn x(&self) -> Range<usize> {
        0..self.s
    }

    /// The clique on `k - 2s` vertices.
    pub fn y(&self) -> Range<usize> {
        self.s..self.k - self.s
    }

    /// The independent set of `n - k + s` vertices.
    pub fn z(&self) -> Range<usize> {
        self.k - self.s..self.n
    }

    pub fn edge_count(&self) -> usize {
        let (s, y, z) = (self.s, self.k - 2 * self.s, self.n - self.k + self.s);
        s * (s - 1) / 2 + y * (y.saturating_sub(1)) / 2 + s * (y + z)
    }
}

pub fn construct_w(n: usize, k: usize, s: usize) -> Result<Graph, ConstructionError> {
    WShape::new(n, k, s).map(|shape| w_graph(&shape))
}

pub fn w_graph(shape: &WShape) -> Graph {
    let mut g = Graph::empty(shape.n);
    for a in shape.x() {
        for b in a + 1..shape.n {
            g.insert_unchecked(a, b);
        }
    }
    let y = shape.y();
    for a in y.clone() {
        for b in a + 1..y.end {
            g.insert_unchecked(a, b);
        }
    }
    g
}

/// A graph from the family `G_2(n, 6)`: `A = {0, 1}` a clique, `B` independent and
/// completely joined to `A`, and `j` vertices each adjacent exactly to `a1 = 0` and
/// `b1 = 2`. Labels run `A`, then `B`, then `J`.
pub fn construct_g2(n: usize, j: usize) -> Result<Graph, ConstructionError> {
    if n < 3 + j {
        return Err(ConstructionError::Invalid(format!(
            "n = {n} cannot host |A| = 2, a non-empty B and |J| = {j}"
        )));
    }
    let b_end = n - j;
    let mut g = Graph::empty(n);
    g.insert_unchecked(0, 1);
    for b in 2..b_end {
        g.insert_unchecked(0, b);
        g.insert_unchecked(1, b);
    }
    for c in b_end..n {
        g.insert_unchecked(0, c);
        g.insert_unchecked(2, c);
    }
    Ok(g)
}

/// A graph from the family `G_3(n, 6)`: `A = {0, 1}` a clique, `B` independent and
/// completely joined to `A`, and `J` a forest of stars with the given vertex counts.
/// Two-vertex stars have both ends joined to both vertices of `A`; in larger stars the
/// centre is joined to both vertices of `A` and every leaf to `a(S) = 0`.
pub fn construct_g3(n: usize, star_sizes: &[usize]) -> Result<Graph, ConstructionError> {
    if star_sizes.len() < 2 {
        return Err(ConstructionError::Invalid("G[J] needs more than one star".into()));
    }
    if let Some(&bad) = star_sizes.iter().find(|&&s| s < 2) {
        return Err(ConstructionError::Invalid(format!(
            "stars need at least two vertices, got {bad}"
        )));
    }
    let j: usize = star_sizes.iter().sum();
    if n < 3 + j {
        return Err(ConstructionError::Invalid(format!(
            "n = {n} cannot host |A| = 2, a non-empty B and |J| = {j}"
        )));
    }
    let mut g = Graph::empty(n);
    g.insert_unchecked(0, 1);
    let b_end = n - j;
    for b in 2..b_end {
        g.insert_unchecked(0, b);
        g.insert_unchecked(1, b);
    }
    let mut next = b_end;
    for &size in star_sizes {
        let centre = next;
        g.insert_unchecked(0, centre);
        g.insert_unchecked(1, centre);
        for leaf in centre + 1..centre + size {
            g.insert_unchecked(centre, leaf);
            g.insert_unchecked(0, leaf);
            if size == 2 {
                g.insert_unchecked(1, leaf);
            }
        }
        next += size;
    }
    Ok(g)
}

pub fn monochrome(g: &Graph, color: Color) -> RedBlueGraph {
    RedBlueGraph::monochrome(g.clone(), color)
}

/// Named closed-form bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FormulaFamily {
    /// Erdős–Gallai bound `(k - 2) n / 2` for paths on `k` vertices.
    #[serde(rename = "eg-path")]
    EgPath,
    /// Erdős–Gallai bound `(k - 1)(n - 1) / 2` for cycles of length at least `k`.
    #[serde(rename = "eg-cycle")]
    EgCycle,
    /// Kopylov's edge threshold above which a 2-connected graph has a cycle of length at least `k`.
    #[serde(rename = "kopylov")]
    Kopylov,
    /// Kopylov's maximum for connected graphs without a path on `k` vertices.
    #[serde(rename = "conn-path-graph")]
    ConnPathGraph,
    /// Exact Berge path Turán number `p C(k-1, r) + C(q, r)` for `k >= r + 2`.
    #[serde(rename = "berge-path")]
    BergePath,
    /// The Győri–Katona–Lemons upper bounds for Berge paths.
    #[serde(rename = "berge-path-bound")]
    BergePathBound,
    /// Exact value `floor(n / (r + 1)) (k - 2) + [r + 1 | n + 1]` for `4 <= k <= r + 1`.
    #[serde(rename = "berge-path-small")]
    BergePathSmall,
    /// Exact value `floor(n / r)` for Berge paths on three vertices.
    #[serde(rename = "berge-p3")]
    BergeP3,
    /// Connected Berge path Turán number.
    #[serde(rename = "conn-berge-path")]
    ConnBergePath,
    /// Bound for 2-connected hypergraphs without Berge cycles of length at least `k`.
    #[serde(rename = "2conn-berge-cycle")]
    TwoConnBergeCycle,
}

impl FormulaFamily {
    pub const ALL: [FormulaFamily; 10] = [
        FormulaFamily::EgPath,
        FormulaFamily::EgCycle,
        FormulaFamily::Kopylov,
        FormulaFamily::ConnPathGraph,
        FormulaFamily::BergePath,
        FormulaFamily::BergePathBound,
        FormulaFamily::BergePathSmall,
        FormulaFamily::BergeP3,
        FormulaFamily::ConnBergePath,
        FormulaFamily::TwoConnBergeCycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaFamily::EgPath => "eg-path",
            FormulaFamily::EgCycle => "eg-cycle",
            FormulaFamily::Kopylov => "kopylov",
            FormulaFamily::ConnPathGraph => "conn-path-graph",
            FormulaFamily::BergePath => "berge-path",
            FormulaFamily::BergePathBound => "berge-path-bound",
            FormulaFamily::BergePathSmall => "berge-path-small",
            FormulaFamily::BergeP3 => "berge-p3",
            FormulaFamily::ConnBergePath => "conn-berge-path",
            FormulaFamily::TwoConnBergeCycle => "2conn-berge-cycle",
        }
    }

    /// Whether the formula involves the uniformity `r`.
    pub fn uses_r(self) -> bool {
        !matches!(
            self,
            FormulaFamily::EgPath | FormulaFamily::EgCycle | FormulaFamily::Kopylov | FormulaFamily::ConnPathGraph
        )
    }
}

impl fmt::Display for FormulaFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaFamily {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FormulaFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| ConstructionError::Invalid(format!("unknown formula family `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaQuery {
    pub family: FormulaFamily,
    pub n: u64,
    pub k: u64,
    pub r: u64,
}

impl FormulaQuery {
    pub fn new(family: FormulaFamily, n: u64, k: u64, r: u64) -> Self {
        Self { family, n, k, r }
    }

    /// `floor(k/2) - 1`, the core size of the path constructions (saturating at 0).
    pub fn t_path(&self) -> u64 {
        (self.k / 2).saturating_sub(1)
    }

    /// `floor((k - 1)/2)`, the core size for cycles of length at least `k`.
    pub fn t_cycle(&self) -> u64 {
        self.k.saturating_sub(1) / 2
    }

    /// `(p, q)` with `n = p (k - 1) + q` and `q < k - 1`.
    pub fn p_q(&self) -> (u64, u64) {
        let d = self.k.saturating_sub(1).max(1);
        (self.n / d, self.n % d)
    }

    /// `1` when `k - 1` is even, i.e. `k` is odd.
    pub fn odd_k_indicator(&self) -> u64 {
        u64::from(self.k % 2 == 1)
    }

    /// `1` when `r + 1` divides `n + 1`.
    pub fn divisibility_indicator(&self) -> u64 {
        u64::from((self.n + 1).is_multiple_of(self.r + 1))
    }

    fn in_hypothesis(&self) -> bool {
        let (n, k, r) = (self.n, self.k, self.r);
        match self.family {
            FormulaFamily::EgPath => n >= k && k >= 2,
            FormulaFamily::EgCycle => n >= k && k >= 3,
            FormulaFamily::Kopylov | FormulaFamily::ConnPathGraph => n >= k && k >= 5,
            FormulaFamily::BergePath => k >= r + 2 && r >= 2,
            FormulaFamily::BergePathBound => (k >= r + 2 && r + 2 > 4) || (r + 1 >= k && k > 3),
            FormulaFamily::BergePathSmall => k >= 4 && k <= r + 1,
            FormulaFamily::BergeP3 => k == 3,
            FormulaFamily::ConnBergePath | FormulaFamily::TwoConnBergeCycle => k >= 2 * r + 2 && r >= 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaValue {
    pub family: FormulaFamily,
    pub n: u64,
    pub k: u64,
    pub r: u64,
    /// The bound as an exact rational, written `p/q`.
    pub exact: String,
    /// `floor` of the exact value.
    pub value: i128,
    pub in_hypothesis: bool,
    /// Set for the results that hold only above an unspecified threshold on `n`.
    pub asymptotic: bool,
}

pub fn binom(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k as i128 {
        acc = acc * (n as i128 - i) / (i + 1);
    }
    acc
}

/// Signed binomial that is zero for negative `n`.
fn binom_i(n: i128, k: u64) -> i128 {
    if n < 0 {
        0
    } else {
        binom(n as u64, k)
    }
}

/// Exact rational value of the formula.
pub fn formula_ratio(q: &FormulaQuery) -> Ratio<i128> {
    let (n, k, r) = (q.n as i128, q.k as i128, q.r);
    let int = Ratio::from_integer;
    match q.family {
        FormulaFamily::EgPath => Ratio::new((k - 2) * n, 2),
        FormulaFamily::EgCycle => Ratio::new((k - 1) * (n - 1), 2),
        FormulaFamily::Kopylov => {
            let t = q.t_cycle() as i128;
            int((binom_i(k - 2, 2) + 2 * (n - k + 2)).max(binom_i(k - t, 2) + t * (n - k + t)))
        }
        FormulaFamily::ConnPathGraph => {
            let ceil_half = (k + 1) / 2;
            int((binom_i(k - 2, 2) + (n - k + 2)).max(binom_i(ceil_half, 2) + ((k - 2) / 2) * (n - ceil_half)))
        }
        FormulaFamily::BergePath => {
            let (p, rem) = q.p_q();
            int(p as i128 * binom_i(k - 1, r) + binom(rem, r))
        }
        FormulaFamily::BergePathBound => {
            if q.k >= q.r + 2 {
                Ratio::new(n * binom_i(k - 1, r), k - 1)
            } else {
                Ratio::new(n * (k - 2), r as i128 + 1)
            }
        }
        FormulaFamily::BergePathSmall => {
            int((n / (r as i128 + 1)) * (k - 2) + q.divisibility_indicator() as i128)
        }
        FormulaFamily::BergeP3 => int(n / r as i128),
        FormulaFamily::ConnBergePath => {
            let t = q.t_path() as i128;
            let ceil_half = (k + 1) / 2;
            int(binom_i(t, r - 1) * (n - ceil_half) + binom_i(ceil_half, r))
        }
        FormulaFamily::TwoConnBergeCycle => {
            let t = q.t_cycle() as i128;
            let ceil = (k + 2) / 2;
            int(binom_i(t, r - 1) * (n - ceil) + binom_i(ceil, r))
        }
    }
}

pub fn formula(q: &FormulaQuery) -> FormulaValue {
    let exact = formula_ratio(q);
    FormulaValue {
        family: q.family,
        n: q.n,
        k: q.k,
        r: q.r,
        exact: format!("{}/{}", exact.numer(), exact.denom()),
        value: exact.floor().to_integer(),
        in_hypothesis: q.in_hypothesis(),
        asymptotic: matches!(
            q.family,
            FormulaFamily::ConnBergePath | FormulaFamily::TwoConnBergeCycle
        ),
    }
}

/// Whether the two closed forms of the connected Berge path number agree:
/// `C(t, r-1)(n - t) + C(t, r) + [k odd] C(t, r-2)` against
/// `C(t, r-1)(n - ceil(k/2)) + C(ceil(k/2), r)` with `t = floor(k/2) - 1`.
pub fn connected_path_forms_agree(n: u64, k: u64, r: u64) -> bool {
    let t = (k / 2).saturating_sub(1);
    let odd = i128::from(k % 2 == 1);
    let lhs = binom(t, r - 1) * (n as i128 - t as i128) + binom(t, r) + odd * if r >= 2 { binom(t, r - 2) } else { 0 };
    let rhs = formula_ratio(&FormulaQuery::new(FormulaFamily::ConnBergePath, n, k, r)).to_integer();
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_edge_counts() {
        assert_eq!(construct_h(20, 8, 3).unwrap().hypergraph.edge_count(), 52);
        assert_eq!(construct_h(20, 9, 3).unwrap().hypergraph.edge_count(), 55);
        let h = construct_h(10, 6, 3).unwrap();
        assert_eq!(h.hypergraph.edge_count(), 8);
        assert!(h.hypergraph.edges().iter().all(|e| e[0] == 0 && e[1] == 1));
        assert!(construct_h(5, 6, 3).is_err());
    }

    #[test]
    fn degenerate_h() {
        let h = construct_h(10, 5, 3).unwrap();
        assert!(h.degenerate);
        assert_eq!(h.hypergraph.edge_count(), 1);
        let h = construct_h(10, 4, 3).unwrap();
        assert_eq!(h.hypergraph.edge_count(), 0);
    }

    #[test]
    fn w_edge_counts() {
        assert_eq!(construct_w(10, 7, 2).unwrap().edge_count(), 20);
        assert_eq!(construct_w(20, 7, 3).unwrap().edge_count(), 54);
        assert_eq!(WShape::new(20, 7, 3).unwrap().edge_count(), 54);
        assert!(construct_w(10, 5, 3).is_err());
    }

    #[test]
    fn g2_and_g3() {
        assert_eq!(construct_g2(28, 10).unwrap().edge_count(), 53);
        let g3 = construct_g3(20, &[2, 2, 2]).unwrap();
        assert!(2 * g3.edge_count() <= 5 * 20 + 2);
        assert!(construct_g3(20, &[2]).is_err());
        assert!(construct_g3(20, &[1, 2]).is_err());
    }

    #[test]
    fn formula_examples() {
        let v = |f, n, k, r| formula(&FormulaQuery::new(f, n, k, r)).value;
        assert_eq!(v(FormulaFamily::ConnBergePath, 20, 8, 3), 52);
        assert_eq!(v(FormulaFamily::TwoConnBergeCycle, 20, 8, 3), 55);
        assert_eq!(v(FormulaFamily::BergePath, 5, 5, 3), 4);
        assert_eq!(v(FormulaFamily::Kopylov, 7, 5, 2), 11);
        assert_eq!(formula(&FormulaQuery::new(FormulaFamily::EgPath, 7, 4, 2)).exact, "7/1");
        assert_eq!(formula(&FormulaQuery::new(FormulaFamily::EgCycle, 6, 4, 2)).exact, "15/2");
        assert!(connected_path_forms_agree(40, 9, 3));
        assert!(connected_path_forms_agree(40, 8, 3));
    }

    #[test]
    fn family_names_round_trip() {
        for f in FormulaFamily::ALL {
            assert_eq!(f.name().parse::<FormulaFamily>().unwrap(), f);
        }
    }
}
