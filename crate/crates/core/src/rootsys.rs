//! Irreducible root systems with exact integer pairings, reflections, and
//! weight bookkeeping.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * Simple roots are numbered Bourbaki-style. In the E family the branch
//!   node is α₂, attached to α₄; the long chain is 1–3–4–5–6–7–8.
//! * `cartan[i][j] = ⟨α_i, α_j⟩ = 2(α_i,α_j)/(α_j,α_j)`. Rows index the
//!   first argument of the pairing.
//! * Short roots have squared length 2; all geometry runs through the
//!   integer pairing and the symmetrizer, never a bilinear form on floats.
//! * Roots are stored positives first, ordered by height then
//!   lexicographically on coefficients; negatives mirror the positives, so
//!   `index(-α) = index(α) ± positive_count`.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Simple Lie algebra family letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Result<Family> {
        Ok(match c {
            'A' | 'a' => Family::A,
            'B' | 'b' => Family::B,
            'C' | 'c' => Family::C,
            'D' | 'd' => Family::D,
            'E' | 'e' => Family::E,
            'F' | 'f' => Family::F,
            'G' | 'g' => Family::G,
            _ => return Err(Error::UnknownFamily(c)),
        })
    }
}

/// A simple type: family plus rank, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    /// Accepts the inclusive rank ranges A≥1, B≥2, C≥2, D≥3, E∈{6,7,8},
    /// F=4, G=2. C₂ and D₃ are allowed (they duplicate B₂ and A₃).
    pub fn new(family: Family, rank: usize) -> Result<LieType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    /// Like [`LieType::new`] but additionally rejects the duplicated low-rank
    /// types C₂ (≅ B₂) and D₃ (≅ A₃).
    pub fn new_strict(family: Family, rank: usize) -> Result<LieType> {
        match (family, rank) {
            (Family::C, 2) | (Family::D, 3) => Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            }),
            _ => LieType::new(family, rank),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// A root, stored as integer coordinates in the simple-root basis.
///
/// Valid roots have all coefficients ≥ 0 or all ≤ 0; membership in a
/// particular system is checked where a system is in scope.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Root {
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    pub fn negated(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn mixed_sign(&self) -> bool {
        let pos = self.coeffs.iter().any(|&c| c > 0);
        let neg = self.coeffs.iter().any(|&c| c < 0);
        pos && neg
    }
}

/// A weight in fundamental-weight coordinates: λ = Σ mᵢ λᵢ.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Weight {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Weight {
        Weight {
            coords: vec![0; rank],
        }
    }

    /// The i-th fundamental weight λ_i (0-based index).
    pub fn fundamental(rank: usize, i: usize) -> Weight {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Weight { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&m| m >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&m| m == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Full root system of a simple type, with every derived table the rest of
/// the crate needs precomputed.
#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    /// Half squared lengths (α_i, α_i)/2 of the simple roots; short = 1.
    simple_len: Vec<i64>,
    roots: Vec<Root>,
    positive_count: usize,
    heights: Vec<i64>,
    /// Half squared length per root.
    root_len: Vec<i64>,
    index: BTreeMap<Vec<i64>, usize>,
    /// For each simple root i, the permutation r ↦ index(s_i(root r)).
    simple_reflections: Vec<Vec<usize>>,
    /// index(root_a + root_b), flattened 2p × 2p; u32::MAX when not a root.
    sum_table: Vec<u32>,
    /// Coroot coordinates: h_β = Σ_j coroot[β][j] h_{α_j}.
    coroot: Vec<Vec<i64>>,
    /// Root-list index of each simple root α_i.
    simple_index: Vec<usize>,
}

const NO_SUM: u32 = u32::MAX;

impl RootSystem {
    /// Builds the root system by closing {±α₁,…,±α_n} under all simple
    /// reflections (the reflection-orbit closure).
    pub fn new(lie_type: LieType) -> RootSystem {
        let n = lie_type.rank();
        let cartan = cartan_matrix(lie_type);
        let symmetrizer = symmetrizer(&cartan);
        // d_i ∝ 1/(α_i,α_i), so the short roots carry the max entry and
        // (α_i,α_i)/2 = max(d)/d_i.
        let dmax = *symmetrizer.iter().max().expect("rank ≥ 1");
        let simple_len: Vec<i64> = symmetrizer.iter().map(|&d| dmax / d).collect();
        for (i, &d) in symmetrizer.iter().enumerate() {
            assert_eq!(d * simple_len[i], dmax, "symmetrizer must divide its max");
        }

        // Reflection-orbit closure starting from the simple roots.
        let pairing_with_simple = |coeffs: &[i64], j: usize| -> i64 {
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &k)| k * cartan[i][j])
                .sum()
        };
        let mut seen: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            let mut v = vec![0i64; n];
            v[i] = 1;
            seen.insert(v.clone(), ());
            queue.push(v.clone());
            let w: Vec<i64> = v.iter().map(|c| -c).collect();
            seen.insert(w.clone(), ());
            queue.push(w);
        }
        while let Some(v) = queue.pop() {
            for j in 0..n {
                let p = pairing_with_simple(&v, j);
                let mut img = v.clone();
                img[j] -= p;
                if !seen.contains_key(&img) {
                    seen.insert(img.clone(), ());
                    queue.push(img);
                }
            }
        }

        let mut positives: Vec<Root> = Vec::new();
        for (coeffs, ()) in &seen {
            let r = Root::new(coeffs.clone());
            assert!(!r.mixed_sign(), "generated root has mixed signs: {coeffs:?}");
            if r.is_positive() {
                positives.push(r);
            }
        }
        positives.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| a.coeffs.cmp(&b.coeffs))
        });
        let positive_count = positives.len();
        assert_eq!(seen.len(), 2 * positive_count, "Φ must be negation-closed");

        let mut roots = positives;
        for i in 0..positive_count {
            let neg = roots[i].negated();
            roots.push(neg);
        }

        let index: BTreeMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), i))
            .collect();
        let heights: Vec<i64> = roots.iter().map(Root::height).collect();

        // Half squared lengths of all roots from the bilinear form
        // (α_i, α_j) = cartan[i][j] · simple_len[j].
        let root_len: Vec<i64> = roots
            .iter()
            .map(|r| {
                let mut sq = 0i64;
                for (i, &ki) in r.coeffs.iter().enumerate() {
                    for (j, &kj) in r.coeffs.iter().enumerate() {
                        sq += ki * kj * cartan[i][j] * simple_len[j];
                    }
                }
                assert!(sq > 0 && sq % 2 == 0, "squared length must be even > 0");
                sq / 2
            })
            .collect();

        let total = roots.len();
        let mut simple_reflections = Vec::with_capacity(n);
        for j in 0..n {
            let mut perm = Vec::with_capacity(total);
            for r in &roots {
                let p = pairing_with_simple(&r.coeffs, j);
                let mut img = r.coeffs.clone();
                img[j] -= p;
                perm.push(index[&img]);
            }
            simple_reflections.push(perm);
        }

        let mut sum_table = vec![NO_SUM; total * total];
        for a in 0..total {
            for b in 0..total {
                let sum: Vec<i64> = roots[a]
                    .coeffs
                    .iter()
                    .zip(&roots[b].coeffs)
                    .map(|(x, y)| x + y)
                    .collect();
                if let Some(&k) = index.get(&sum) {
                    sum_table[a * total + b] = k as u32;
                }
            }
        }

        // h_β = Σ_j c_j h_{α_j} with c_j = k_j (α_j,α_j) / (β,β).
        let coroot: Vec<Vec<i64>> = roots
            .iter()
            .enumerate()
            .map(|(r, root)| {
                root.coeffs
                    .iter()
                    .enumerate()
                    .map(|(j, &kj)| {
                        let num = kj * simple_len[j];
                        assert_eq!(num % root_len[r], 0, "coroot must be integral");
                        num / root_len[r]
                    })
                    .collect()
            })
            .collect();

        let simple_index: Vec<usize> = (0..n)
            .map(|i| {
                let mut v = vec![0i64; n];
                v[i] = 1;
                index[&v]
            })
            .collect();

        RootSystem {
            lie_type,
            cartan,
            symmetrizer,
            simple_len,
            roots,
            positive_count,
            heights,
            root_len,
            index,
            simple_reflections,
            sum_table,
            coroot,
            simple_index,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn positive_count(&self) -> usize {
        self.positive_count
    }

    pub fn root(&self, ix: usize) -> &Root {
        &self.roots[ix]
    }

    pub fn height(&self, ix: usize) -> i64 {
        self.heights[ix]
    }

    /// Half squared length (α,α)/2 of root `ix`; 1 for short roots.
    pub fn root_len(&self, ix: usize) -> i64 {
        self.root_len[ix]
    }

    pub fn is_positive_ix(&self, ix: usize) -> bool {
        ix < self.positive_count
    }

    /// Index of −root_ix.
    pub fn neg(&self, ix: usize) -> usize {
        if ix < self.positive_count {
            ix + self.positive_count
        } else {
            ix - self.positive_count
        }
    }

    /// Root-list index of the simple root α_i (0-based i).
    pub fn simple_ix(&self, i: usize) -> usize {
        self.simple_index[i]
    }

    /// The permutation r ↦ index(s_{α_i}(root r)).
    pub fn simple_reflection_table(&self, i: usize) -> &[usize] {
        &self.simple_reflections[i]
    }

    /// If root `ix` is a simple root α_i, returns i.
    pub fn simple_of_ix(&self, ix: usize) -> Option<usize> {
        self.simple_index.iter().position(|&s| s == ix)
    }

    pub fn root_index(&self, root: &Root) -> Result<usize> {
        if root.coeffs.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: root.coeffs.len(),
            });
        }
        self.index
            .get(&root.coeffs)
            .copied()
            .ok_or_else(|| Error::NotARoot {
                coeffs: root.coeffs.clone(),
            })
    }

    pub fn index_of_coeffs(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// index(root_a + root_b) when the sum is again a root.
    pub fn sum_ix(&self, a: usize, b: usize) -> Option<usize> {
        let v = self.sum_table[a * self.roots.len() + b];
        if v == NO_SUM {
            None
        } else {
            Some(v as usize)
        }
    }

    /// ⟨root_a, root_b⟩ by index, always an integer.
    pub fn pairing_ix(&self, a: usize, b: usize) -> i64 {
        let mut form = 0i64;
        for (i, &ki) in self.roots[a].coeffs.iter().enumerate() {
            for (j, &kj) in self.roots[b].coeffs.iter().enumerate() {
                form += ki * kj * self.cartan[i][j] * self.simple_len[j];
            }
        }
        debug_assert_eq!(form % self.root_len[b], 0);
        form / self.root_len[b]
    }

    /// ⟨x, β⟩ for a root x; `beta` must belong to the system.
    pub fn pairing_root(&self, x: &Root, beta: &Root) -> Result<i64> {
        let a = self.root_index(x)?;
        let b = self.root_index(beta)?;
        Ok(self.pairing_ix(a, b))
    }

    /// ⟨λ, β⟩ for a weight λ; `beta` must belong to the system.
    pub fn pairing_weight(&self, lam: &Weight, beta: &Root) -> Result<i64> {
        if lam.coords.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: lam.coords.len(),
            });
        }
        let b = self.root_index(beta)?;
        Ok(self.pairing_weight_ix(lam, b))
    }

    /// ⟨λ, root_b⟩ by root index. (λ, α_j) = m_j·(α_j,α_j)/2 in the
    /// fundamental basis, so the form against β = Σ k_j α_j is Σ k_j m_j d_j.
    pub fn pairing_weight_ix(&self, lam: &Weight, b: usize) -> i64 {
        let mut form = 0i64;
        for (j, &kj) in self.roots[b].coeffs.iter().enumerate() {
            form += kj * lam.coords[j] * self.simple_len[j];
        }
        debug_assert_eq!(form % self.root_len[b], 0);
        form / self.root_len[b]
    }

    /// s_β(x) = x − ⟨x,β⟩β for a root x.
    pub fn reflect_root(&self, x: &Root, beta: &Root) -> Result<Root> {
        let a = self.root_index(x)?;
        let b = self.root_index(beta)?;
        Ok(self.roots[self.reflect_ix(a, b)].clone())
    }

    /// Index form of the root reflection.
    pub fn reflect_ix(&self, a: usize, b: usize) -> usize {
        if let Some(i) = self.simple_of_ix(b) {
            return self.simple_reflections[i][a];
        }
        let p = self.pairing_ix(a, b);
        let coeffs: Vec<i64> = self.roots[a]
            .coeffs
            .iter()
            .zip(&self.roots[b].coeffs)
            .map(|(x, y)| x - p * y)
            .collect();
        self.index[&coeffs]
    }

    /// s_β(λ) = λ − ⟨λ,β⟩β for a weight λ, in fundamental coordinates.
    pub fn reflect_weight(&self, lam: &Weight, beta: &Root) -> Result<Weight> {
        let b = self.root_index(beta)?;
        if lam.coords.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: lam.coords.len(),
            });
        }
        Ok(self.reflect_weight_ix(lam, b))
    }

    pub fn reflect_weight_ix(&self, lam: &Weight, b: usize) -> Weight {
        let p = self.pairing_weight_ix(lam, b);
        let fund = self.root_fundamental_coords(b);
        Weight {
            coords: lam
                .coords
                .iter()
                .zip(&fund)
                .map(|(m, f)| m - p * f)
                .collect(),
        }
    }

    /// Fundamental coordinates ⟨β, α_i⟩ of a root, i.e. the weight it
    /// represents.
    pub fn root_fundamental_coords(&self, b: usize) -> Vec<i64> {
        (0..self.rank())
            .map(|i| {
                self.roots[b]
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(j, &kj)| kj * self.cartan[j][i])
                    .sum()
            })
            .collect()
    }

    pub fn root_as_weight(&self, b: usize) -> Weight {
        Weight {
            coords: self.root_fundamental_coords(b),
        }
    }

    /// Coroot coordinates of root `ix`: h_β = Σ_j c_j h_{α_j}.
    pub fn coroot_coords(&self, ix: usize) -> &[i64] {
        &self.coroot[ix]
    }

    /// ρ = Σ λ_i, the half-sum of positive roots in fundamental coordinates.
    pub fn rho(&self) -> Weight {
        Weight {
            coords: vec![1; self.rank()],
        }
    }

    /// Weyl dimension of V(λ): ∏_{α>0} (λ+ρ, α)/(ρ, α), exactly.
    pub fn weyl_dim(&self, lam: &Weight) -> BigUint {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for p in 0..self.positive_count {
            let mut top = 0i64;
            let mut bot = 0i64;
            for (j, &kj) in self.roots[p].coeffs.iter().enumerate() {
                top += kj * (lam.coords[j] + 1) * self.simple_len[j];
                bot += kj * self.simple_len[j];
            }
            num *= BigUint::from(top as u64);
            den *= BigUint::from(bot as u64);
        }
        let (q, r) = num_integer::Integer::div_rem(&num, &den);
        assert!(r.is_zero(), "Weyl dimension must divide exactly");
        q
    }

    /// All nonzero dominant weights with every coordinate ≤ `coeff_bound`
    /// and Weyl dimension ≤ `dim_cap`, in ascending lexicographic order.
    pub fn dominant_weights_up_to(&self, coeff_bound: i64, dim_cap: u64) -> Vec<Weight> {
        let n = self.rank();
        let cap = BigUint::from(dim_cap);
        let mut out = Vec::new();
        let mut coords = vec![0i64; n];
        loop {
            // lexicographic odometer over [0, coeff_bound]^n
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if coords[i] < coeff_bound {
                    coords[i] += 1;
                    for c in coords.iter_mut().skip(i + 1) {
                        *c = 0;
                    }
                    break;
                }
            }
            let w = Weight {
                coords: coords.clone(),
            };
            if !w.is_zero() && self.weyl_dim(&w) <= cap {
                out.push(w);
            }
        }
    }
}

/// Cartan matrix with entries ⟨α_i, α_j⟩ in Bourbaki numbering.
fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut chain = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match t.family() {
        Family::A => {
            for i in 0..n - 1 {
                chain(i, i + 1);
            }
        }
        Family::B => {
            // α_n short: ⟨α_{n-1}, α_n⟩ = −2.
            for i in 0..n - 2 {
                chain(i, i + 1);
            }
            c[n - 2][n - 1] = -2;
            c[n - 1][n - 2] = -1;
        }
        Family::C => {
            // α_n long: ⟨α_n, α_{n-1}⟩ = −2.
            for i in 0..n - 2 {
                chain(i, i + 1);
            }
            c[n - 2][n - 1] = -1;
            c[n - 1][n - 2] = -2;
        }
        Family::D => {
            for i in 0..n - 2 {
                chain(i, i + 1);
            }
            chain(n - 3, n - 1);
        }
        Family::E => {
            // Chain 1–3–4–5–…–n with the branch 2–4.
            chain(0, 2);
            for i in 2..n - 1 {
                chain(i, i + 1);
            }
            chain(1, 3);
        }
        Family::F => {
            // α₁, α₂ long; α₃, α₄ short: ⟨α₂, α₃⟩ = −2.
            chain(0, 1);
            chain(2, 3);
            c[1][2] = -2;
            c[2][1] = -1;
        }
        Family::G => {
            // α₁ short, α₂ long: ⟨α₂, α₁⟩ = −3.
            c[0][1] = -1;
            c[1][0] = -3;
        }
    }
    c
}

/// Smallest positive integers d with d_i·cartan[i][j] symmetric.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d = vec![0i64; n];
    d[0] = 1;
    // Propagate along edges of the (connected) diagram.
    let mut done = 1;
    while done < n {
        let before = done;
        for i in 0..n {
            if d[i] == 0 {
                continue;
            }
            for j in 0..n {
                if d[j] == 0 && cartan[i][j] != 0 {
                    // d_i c_ij = d_j c_ji  ⇒  d_j = d_i c_ij / c_ji
                    let num = d[i] * cartan[i][j];
                    let den = cartan[j][i];
                    if num % den == 0 {
                        d[j] = num / den;
                    } else {
                        // scale everything set so far
                        let k = den.abs() / gcd(num.abs(), den.abs());
                        for v in d.iter_mut() {
                            *v *= k;
                        }
                        d[j] = d[i] * cartan[i][j] / cartan[j][i];
                    }
                    done += 1;
                }
            }
        }
        assert!(done > before, "Dynkin diagram must be connected");
    }
    let g = d.iter().fold(0i64, |acc, &v| gcd(acc, v.abs()));
    for v in d.iter_mut() {
        *v /= g;
    }
    for i in 0..n {
        for j in 0..n {
            assert_eq!(
                d[i] * cartan[i][j],
                d[j] * cartan[j][i],
                "symmetrizer check failed"
            );
        }
    }
    d
}

fn gcd(a: i64, b: i64) -> i64 {
    if a == 0 {
        b
    } else {
        gcd(b % a, a)
    }
}
