//! Brute-force enumeration of the tree species `𝒯(1)` and `𝒯(r)`.
//!
//! A rooted tree whose leaves are labelled by a set `L` and which has no
//! unary vertices is determined by its clusters, the leaf sets of its
//! internal vertices. Leaves of `𝒯(r,n)` are the points `(k, j)` of
//! `μ_r × [n]`, with bit index `j·r + k` in a `u64` mask; `ω` acts by
//! `(k, j) ↦ (k+1, j)`.
//!
//! `𝒯(r,n)` for `r ≥ 2` consists of the trees on `μ_r × [n]` such that
//! 1. the cluster set is `μ_r`-stable,
//! 2. every fixed vertex has at most one fixed child,
//! 3. `μ_r` acts freely on the non-fixed children of every fixed vertex.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cohomology::{e_species_series, ESpeciesPart};
use crate::error::{Error, Result};
use crate::plethysm::{plethysm, plethysm_ws};
use crate::poly::CoeffPoly;
use crate::rational::Rational;
use crate::reps::{enumerate_classes, ClassData, WreathElement};
use crate::series::WreathSeries;

/// Largest `n` enumerated for a given `r`.
pub fn size_limit(r: u32) -> usize {
    match r {
        1 => 6,
        2 => 4,
        3 => 3,
        4..=32 => 2,
        _ => 1,
    }
}

fn guard(r: u32, n: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::pre("r must be positive"));
    }
    let limit = size_limit(r);
    if n > limit || (r as usize) * n > 64 {
        return Err(Error::SizeGuard { r, n, limit });
    }
    Ok(())
}

/// A rooted tree with leaves `(zeta, j)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RTree {
    Leaf { zeta: u32, j: usize },
    Node(Vec<RTree>),
}

impl RTree {
    pub fn leaf_count(&self) -> usize {
        match self {
            RTree::Leaf { .. } => 1,
            RTree::Node(children) => children.iter().map(RTree::leaf_count).sum(),
        }
    }

    /// Leaf set as a mask, for rank `r`.
    pub fn leaf_mask(&self, r: u32) -> u64 {
        match self {
            RTree::Leaf { zeta, j } => 1 << (*j as u64 * r as u64 + *zeta as u64),
            RTree::Node(children) => children.iter().fold(0, |m, c| m | c.leaf_mask(r)),
        }
    }

    fn clusters_into(&self, r: u32, out: &mut Vec<u64>) -> u64 {
        match self {
            RTree::Leaf { .. } => self.leaf_mask(r),
            RTree::Node(children) => {
                let m = children.iter().fold(0, |m, c| m | c.clusters_into(r, out));
                out.push(m);
                m
            }
        }
    }

    /// The canonical form of this tree. Fails if some internal vertex has
    /// fewer than two children or a leaf label repeats.
    pub fn canonical(&self, r: u32, n: usize) -> Result<TreeIsoClass> {
        fn check(t: &RTree) -> bool {
            match t {
                RTree::Leaf { .. } => true,
                RTree::Node(c) => c.len() >= 2 && c.iter().all(check),
            }
        }
        if !check(self) {
            return Err(Error::pre("internal vertex with fewer than two children"));
        }
        let full = full_mask(r, n);
        if self.leaf_count() != (r as usize) * n || self.leaf_mask(r) != full {
            return Err(Error::pre("leaves must be exactly μ_r × [n]"));
        }
        let mut clusters = Vec::new();
        self.clusters_into(r, &mut clusters);
        Ok(TreeIsoClass::from_clusters(r, n, clusters))
    }
}

/// An isomorphism class of leaf-labelled rooted trees, stored as its sorted
/// list of clusters with at least two leaves.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeIsoClass {
    r: u32,
    n: usize,
    clusters: Vec<u64>,
}

impl TreeIsoClass {
    fn from_clusters(r: u32, n: usize, mut clusters: Vec<u64>) -> Self {
        clusters.retain(|m| m.count_ones() >= 2);
        clusters.sort_unstable();
        clusters.dedup();
        TreeIsoClass { r, n, clusters }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn clusters(&self) -> &[u64] {
        &self.clusters
    }

    /// The tree, children ordered by their smallest leaf in `(j, zeta)`
    /// order.
    pub fn to_rtree(&self) -> RTree {
        self.subtree(full_mask(self.r, self.n))
    }

    fn subtree(&self, mask: u64) -> RTree {
        if mask.count_ones() == 1 {
            let bit = mask.trailing_zeros();
            return RTree::Leaf { zeta: bit % self.r, j: (bit / self.r) as usize };
        }
        let mut children = self.children(mask);
        children.sort_unstable_by_key(|m| m.trailing_zeros());
        RTree::Node(children.into_iter().map(|c| self.subtree(c)).collect())
    }

    /// Maximal proper clusters of `mask`, plus its uncovered leaves.
    fn children(&self, mask: u64) -> Vec<u64> {
        let inner: Vec<u64> = self.clusters.iter().copied().filter(|&c| c != mask && c & mask == c).collect();
        let mut out: Vec<u64> =
            inner.iter().copied().filter(|&c| !inner.iter().any(|&d| d != c && c & d == c)).collect();
        let covered = out.iter().fold(0, |a, b| a | b);
        let mut rest = mask & !covered;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            out.push(bit);
            rest ^= bit;
        }
        out
    }

    /// ASCII drawing, one vertex per line.
    pub fn render(&self) -> String {
        fn label(r: u32, zeta: u32, j: usize) -> String {
            match r {
                1 => format!("{}", j + 1),
                2 if zeta == 0 => format!("+{}", j + 1),
                2 => format!("-{}", j + 1),
                _ => format!("({zeta},{})", j + 1),
            }
        }
        fn go(t: &RTree, r: u32, prefix: &str, last: bool, root: bool, out: &mut String) {
            let (branch, extend) = match (root, last) {
                (true, _) => ("", ""),
                (false, true) => ("└─ ", "   "),
                (false, false) => ("├─ ", "│  "),
            };
            match t {
                RTree::Leaf { zeta, j } => {
                    out.push_str(&format!("{prefix}{branch}{}\n", label(r, *zeta, *j)));
                }
                RTree::Node(children) => {
                    out.push_str(&format!("{prefix}{branch}*\n"));
                    let next = format!("{prefix}{extend}");
                    for (i, c) in children.iter().enumerate() {
                        go(c, r, &next, i + 1 == children.len(), false, out);
                    }
                }
            }
        }
        let mut out = String::new();
        go(&self.to_rtree(), self.r, "", true, true, &mut out);
        out
    }

    /// Whether the tree satisfies the three `μ_r` conditions. Every tree
    /// is valid for `r = 1`.
    pub fn is_valid(&self) -> bool {
        let r = self.r;
        if r == 1 {
            return true;
        }
        let set: BTreeSet<u64> = self.clusters.iter().copied().collect();
        let is_cluster = |m: u64| m.count_ones() == 1 || set.contains(&m);
        if !self.clusters.iter().all(|&c| is_cluster(rotate(c, r, 1))) {
            return false;
        }
        let fixed = |m: u64| rotate(m, r, 1) == m;
        for &v in self.clusters.iter().filter(|&&v| fixed(v)) {
            let children = self.children(v);
            if children.iter().filter(|&&c| fixed(c)).count() > 1 {
                return false;
            }
            let free = |c: u64| (1..r).all(|d| rotate(c, r, d) != c);
            if !children.iter().filter(|&&c| !fixed(c)).all(|&c| free(c)) {
                return false;
            }
        }
        true
    }

    /// Whether `w` maps the tree to itself.
    pub fn is_fixed_by(&self, w: &WreathElement) -> bool {
        self.clusters.iter().all(|&c| self.clusters.binary_search(&act(w, c)).is_ok())
    }
}

impl fmt::Debug for TreeIsoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rtree())
    }
}

fn full_mask(r: u32, n: usize) -> u64 {
    let bits = r as usize * n;
    if bits == 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

fn orbit_mask(r: u32, j: usize) -> u64 {
    full_mask(r, 1) << (j as u64 * r as u64)
}

fn bits(mask: u64) -> impl Iterator<Item = u32> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        (rest != 0).then(|| {
            let b = rest.trailing_zeros();
            rest &= rest - 1;
            b
        })
    })
}

/// `ω^d` applied to every leaf of `mask`.
fn rotate(mask: u64, r: u32, d: u32) -> u64 {
    bits(mask).fold(0, |acc, b| {
        let (k, j) = (b % r, b / r);
        acc | 1 << (j * r + (k + d) % r)
    })
}

fn act(w: &WreathElement, mask: u64) -> u64 {
    let r = w.r();
    bits(mask).fold(0, |acc, b| {
        let (k, j) = w.act(b % r, (b / r) as usize);
        acc | 1 << (j as u32 * r + k)
    })
}

/// Set partitions of `mask` into blocks, the block holding the lowest bit
/// first.
fn set_partitions(mask: u64) -> Vec<Vec<u64>> {
    if mask == 0 {
        return vec![Vec::new()];
    }
    let low = mask & mask.wrapping_neg();
    let rest = mask ^ low;
    let mut out = Vec::new();
    // every subset of `rest` joins the lowest element
    let mut sub = rest;
    loop {
        let block = low | sub;
        for mut tail in set_partitions(rest & !sub) {
            tail.insert(0, block);
            out.push(tail);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
    out
}

type Clusters = Vec<u64>;

#[derive(Default)]
struct Enumerator {
    plain: HashMap<u64, Arc<Vec<Clusters>>>,
    wreath: HashMap<u64, Arc<Vec<Clusters>>>,
}

impl Enumerator {
    /// All trees (cluster lists) with leaf set `mask`, no `μ_r` conditions.
    fn plain(&mut self, mask: u64) -> Arc<Vec<Clusters>> {
        if let Some(t) = self.plain.get(&mask) {
            return t.clone();
        }
        let mut out = Vec::new();
        if mask.count_ones() == 1 {
            out.push(Vec::new());
        } else {
            for blocks in set_partitions(mask).into_iter().filter(|b| b.len() >= 2) {
                let choices: Vec<_> = blocks.iter().map(|&b| self.plain(b)).collect();
                for mut combo in product(&choices) {
                    combo.push(mask);
                    out.push(combo);
                }
            }
        }
        let out = Arc::new(out);
        self.plain.insert(mask, out.clone());
        out
    }

    /// Candidates for `𝒯(r, J)`, `J` a mask over `[n]`: a root whose
    /// children are an optional fixed subtree on `μ_r × J_0` and free
    /// `μ_r`-orbits of `𝒯(1)` subtrees covering `μ_r × (J ∖ J_0)`.
    fn wreath(&mut self, r: u32, js: u64) -> Arc<Vec<Clusters>> {
        if let Some(t) = self.wreath.get(&js) {
            return t.clone();
        }
        let root: u64 = bits(js).fold(0, |m, j| m | orbit_mask(r, j as usize));
        let mut out = Vec::new();
        let mut j0 = js;
        loop {
            j0 = (j0.wrapping_sub(1)) & js;
            // j0 runs over proper subsets of js, ending with the empty set
            let fixed: Arc<Vec<Clusters>> = if j0 == 0 { Arc::new(vec![Vec::new()]) } else { self.wreath(r, j0) };
            for blocks in set_partitions(js & !j0) {
                let mut choices = vec![fixed.clone()];
                for &block in &blocks {
                    choices.push(Arc::new(self.free_orbits(r, block)));
                }
                for mut combo in product(&choices) {
                    combo.push(root);
                    out.push(combo);
                }
            }
            if j0 == 0 {
                break;
            }
        }
        let out = Arc::new(out);
        self.wreath.insert(js, out.clone());
        out
    }

    /// Orbits `{ω^d T}` of trees `T` on a transversal `{(c_j, j) : j ∈ J}`,
    /// colorings normalized by `c_{min J} = 0`.
    fn free_orbits(&mut self, r: u32, js: u64) -> Vec<Clusters> {
        let idx: Vec<u32> = bits(js).collect();
        let count = (r as usize).pow(idx.len() as u32 - 1);
        let mut out = Vec::new();
        for code in 0..count {
            let mut c = code;
            let mut block = 1u64 << (idx[0] * r);
            for &j in &idx[1..] {
                block |= 1 << (j * r + (c % r as usize) as u32);
                c /= r as usize;
            }
            for t in self.plain(block).iter() {
                let mut orbit = Vec::with_capacity(t.len() * r as usize);
                for d in 0..r {
                    orbit.extend(t.iter().map(|&m| rotate(m, r, d)));
                }
                out.push(orbit);
            }
        }
        out
    }
}

fn product(choices: &[Arc<Vec<Clusters>>]) -> Vec<Clusters> {
    let mut acc: Vec<Clusters> = vec![Vec::new()];
    for options in choices {
        let mut next = Vec::with_capacity(acc.len() * options.len());
        for prefix in &acc {
            for o in options.iter() {
                let mut v = prefix.clone();
                v.extend_from_slice(o);
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

type TreeList = Arc<Vec<TreeIsoClass>>;

/// All of `𝒯(r,n)`, sorted. Every generated tree is checked against the
/// `μ_r` conditions directly.
pub fn enumerate_trees(r: u32, n: usize) -> Result<TreeList> {
    guard(r, n)?;
    static CACHE: OnceLock<Mutex<HashMap<(u32, usize), TreeList>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache poisoned").get(&(r, n)) {
        return Ok(t.clone());
    }
    let mut e = Enumerator::default();
    let raw = match (r, n) {
        (_, 0) => Arc::new(Vec::new()),
        (1, _) => e.plain(full_mask(1, n)),
        _ => e.wreath(r, full_mask(1, n)),
    };
    let set: BTreeSet<TreeIsoClass> = raw.iter().map(|c| TreeIsoClass::from_clusters(r, n, c.clone())).collect();
    if let Some(bad) = set.iter().find(|t| !t.is_valid()) {
        return Err(Error::consistency(format!("generated an invalid tree {bad:?}")));
    }
    let list = Arc::new(set.into_iter().collect::<Vec<_>>());
    cache.lock().expect("cache poisoned").insert((r, n), list.clone());
    Ok(list)
}

/// `𝒯(r,n)` by filtering every tree on `μ_r × [n]` through the `μ_r`
/// conditions. Exponentially slower than [`enumerate_trees`]; used to
/// cross-check it.
pub fn enumerate_trees_by_filtering(r: u32, n: usize) -> Result<Vec<TreeIsoClass>> {
    guard(r, n)?;
    if (r as usize) * n > 6 {
        return Err(Error::SizeGuard { r, n, limit: 6 / r as usize });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut e = Enumerator::default();
    let set: BTreeSet<TreeIsoClass> = e
        .plain(full_mask(r, n))
        .iter()
        .map(|c| TreeIsoClass::from_clusters(r, n, c.clone()))
        .filter(TreeIsoClass::is_valid)
        .collect();
    Ok(set.into_iter().collect())
}

/// Number of trees in `𝒯(r,n)` fixed by a representative of `class`.
pub fn fixed_tree_count(r: u32, n: usize, class: &ClassData) -> Result<u64> {
    if class.r() != r || class.n() != n {
        return Err(Error::pre(format!("class {class} is not a class of W({r},{n})")));
    }
    let w = WreathElement::representative(class);
    fixed_tree_count_of(r, n, &w)
}

/// Number of trees in `𝒯(r,n)` fixed by `w`.
pub fn fixed_tree_count_of(r: u32, n: usize, w: &WreathElement) -> Result<u64> {
    if w.r() != r || w.n() != n {
        return Err(Error::pre("element is not in W(r,n)"));
    }
    let trees = enumerate_trees(r, n)?;
    Ok(trees.iter().filter(|t| t.is_fixed_by(w)).count() as u64)
}

/// The degree-`n` part of `Z_{𝒯(r)}`: `Σ_w |𝒯(r,n)^w| p_w / z_w`.
pub fn tree_cycle_index(r: u32, n: usize) -> Result<WreathSeries> {
    guard(r, n)?;
    let mut terms = Vec::new();
    for class in enumerate_classes(r, n) {
        let count = fixed_tree_count(r, n, &class)?;
        if count > 0 {
            let c = Rational::new(BigInt::from(count), class.centralizer_order());
            terms.push((class.monomial(), CoeffPoly::constant(c)));
        }
    }
    WreathSeries::from_terms(r, n, terms)
}

/// `Z_{𝒯(r)}` through degree `truncation`, from the enumeration.
pub fn tree_cycle_index_series(r: u32, truncation: usize) -> Result<WreathSeries> {
    guard(r, truncation)?;
    let mut out = WreathSeries::zero(r, truncation);
    for n in 1..=truncation {
        let level = tree_cycle_index(r, n)?;
        for (m, c) in level.terms() {
            out.add_term(m.clone(), c.clone());
        }
    }
    Ok(out)
}

/// One degree of a recursion check.
#[derive(Clone, Debug)]
pub struct DegreeCheck {
    pub degree: usize,
    pub enumerated: WreathSeries,
    pub assembled: WreathSeries,
}

impl DegreeCheck {
    pub fn passed(&self) -> bool {
        self.enumerated == self.assembled
    }
}

/// Outcome of comparing the enumerated cycle index with the species
/// recursion, degree by degree.
#[derive(Clone, Debug)]
pub struct TreeRecursionReport {
    pub r: u32,
    pub truncation: usize,
    pub degrees: Vec<DegreeCheck>,
}

impl TreeRecursionReport {
    pub fn passed(&self) -> bool {
        self.degrees.iter().all(DegreeCheck::passed)
    }
}

impl fmt::Display for TreeRecursionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.degrees {
            if d.passed() {
                writeln!(f, "r={} degree {}: ok", self.r, d.degree)?;
            } else {
                let diff = d.enumerated.sub(&d.assembled).map_err(|_| fmt::Error)?;
                writeln!(f, "r={} degree {}: MISMATCH", self.r, d.degree)?;
                writeln!(f, "  enumerated: {}", d.enumerated.render())?;
                writeln!(f, "  assembled:  {}", d.assembled.render())?;
                writeln!(f, "  difference: {}", diff.render())?;
            }
        }
        Ok(())
    }
}

/// Compares the enumerated `Z_{𝒯(r)}` against
/// `p_1 + Z_{E(1)_{≥2}} ∘ Z_{𝒯(1)}` (`r = 1`) or
/// `(1 + Z_{𝒯(r)}) · (Z_{E(r)_+} ∘ Z_{𝒯(1)})` (`r ≥ 2`), in each degree
/// `1..=truncation`.
pub fn verify_tree_recursions(r: u32, truncation: usize) -> Result<TreeRecursionReport> {
    let z = tree_cycle_index_series(r, truncation)?;
    let z1 = if r == 1 { z.clone() } else { tree_cycle_index_series(1, truncation)? };
    let assembled = if r == 1 {
        let e = e_species_series(1, ESpeciesPart::Geq2, truncation)?;
        WreathSeries::p1(truncation).add(&plethysm(&e, &z1)?)?
    } else {
        let e = e_species_series(r, ESpeciesPart::Plus, truncation)?;
        WreathSeries::one(r, truncation).add(&z)?.mul(&plethysm_ws(&e, &z1)?)?
    };
    let degrees = (1..=truncation)
        .map(|d| DegreeCheck { degree: d, enumerated: z.homogeneous(d), assembled: assembled.homogeneous(d) })
        .collect();
    Ok(TreeRecursionReport { r, truncation, degrees })
}

/// `|𝒯(r,n)|` read off the cycle index: `r^n n!` times the coefficient of
/// `p_1(1)^n`.
pub fn count_from_cycle_index(z: &WreathSeries, n: usize) -> Rational {
    let class = ClassData::identity(z.r(), n);
    let c = z.coeff_of(&class.monomial());
    let c = c.as_constant().unwrap_or_else(Rational::zero);
    c * Rational::from_integer(class.centralizer_order())
}
