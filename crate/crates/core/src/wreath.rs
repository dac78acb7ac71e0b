//! Elements of `Z_k ≀ S_n`: group arithmetic, cycle sums, (marked) types,
//! conjugacy and K-conjugacy classes with their sizes, explicit
//! K-conjugator construction and the symmetric-Gelfand-pair check, where
//! `K = Z_k ≀ S_{n-1}` embeds as the elements fixing `n` with color 0.
//!
//! Conventions, fixed by the worked products they must reproduce:
//! permutations compose left to right (`p` before `q`), and the product
//! `(σ; p)(ε; q)` has color `σ_{q⁻¹(i)} + ε_i` at position `i`.
//!
//! Element text format: `c_1,...,c_n ; i_1,...,i_n` — colors, then the
//! one-line image list. Cycle notation such as `(1,4)(2,5)(3)` is accepted
//! for the permutation on input.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::shapes::{KPartitePartition, MarkedKPartitePartition, Partition};
use crate::{Error, Result};

/// A permutation of `{1, ..., n}`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            assert!(v >= 1 && v <= n && !seen[v], "not a bijection: {images:?}");
            seen[v] = true;
        }
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// `self` applied first, then `other`.
    pub fn then(&self, other: &Permutation) -> Self {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&v| other.apply(v)).collect(),
        }
    }

    /// Disjoint cycles, each starting at its minimum, sorted by minimum.
    /// Fixed points are included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut point = start;
            while !seen[point] {
                seen[point] = true;
                cycle.push(point);
                point = self.apply(point);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// The cycle through `point`, listed starting at `point`.
    pub fn cycle_through(&self, point: usize) -> Vec<usize> {
        let mut cycle = vec![point];
        let mut p = self.apply(point);
        while p != point {
            cycle.push(p);
            p = self.apply(p);
        }
        cycle
    }

    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut moved = vec![false; n + 1];
        for cycle in cycles {
            for (i, &point) in cycle.iter().enumerate() {
                if point < 1 || point > n {
                    return Err(Error::Parse(format!("point {point} out of range 1..={n}")));
                }
                if moved[point] {
                    return Err(Error::Parse(format!("point {point} repeated in cycles")));
                }
                moved[point] = true;
                images[point - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// An element `(colors; perm)` of `Z_k ≀ S_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WreathElement {
    k: usize,
    colors: Vec<usize>,
    perm: Permutation,
}

impl WreathElement {
    pub fn new(k: usize, colors: Vec<usize>, perm: Permutation) -> Self {
        assert!(k >= 1, "k must be at least 1");
        assert_eq!(colors.len(), perm.degree(), "colors/permutation length mismatch");
        assert!(colors.iter().all(|&c| c < k), "colors must lie in 0..{k}");
        WreathElement { k, colors, perm }
    }

    pub fn identity(k: usize, n: usize) -> Self {
        Self::new(k, vec![0; n], Permutation::identity(n))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    /// Group product; `self` acts first in the permutation part.
    pub fn multiply(&self, other: &WreathElement) -> WreathElement {
        assert_eq!(self.k, other.k, "k mismatch");
        assert_eq!(self.n(), other.n(), "degree mismatch");
        let q_inv = other.perm.inverse();
        let colors = (1..=self.n())
            .map(|i| (self.colors[q_inv.apply(i) - 1] + other.colors[i - 1]) % self.k)
            .collect();
        WreathElement {
            k: self.k,
            colors,
            perm: self.perm.then(&other.perm),
        }
    }

    pub fn inverse(&self) -> WreathElement {
        let colors = (1..=self.n())
            .map(|i| (self.k - self.colors[self.perm.apply(i) - 1]) % self.k)
            .collect();
        WreathElement {
            k: self.k,
            colors,
            perm: self.perm.inverse(),
        }
    }

    /// Sum of the colors along a cycle of the permutation, mod `k`.
    pub fn cycle_sum(&self, cycle: &[usize]) -> Result<usize> {
        for (i, &point) in cycle.iter().enumerate() {
            if self.perm.apply(point) != cycle[(i + 1) % cycle.len()] {
                return Err(Error::Invalid(format!(
                    "{cycle:?} is not a cycle of the permutation"
                )));
            }
        }
        Ok(cycle.iter().map(|&p| self.colors[p - 1]).sum::<usize>() % self.k)
    }

    /// The type: component `i` collects the lengths of cycles with cycle
    /// sum `i`.
    pub fn type_of(&self) -> KPartitePartition {
        let mut lengths: Vec<Vec<usize>> = vec![Vec::new(); self.k];
        for cycle in self.perm.cycles() {
            let sum = self.cycle_sum(&cycle).unwrap();
            lengths[sum].push(cycle.len());
        }
        let components = lengths
            .into_iter()
            .map(|mut v| {
                v.sort_unstable_by(|a, b| b.cmp(a));
                Partition::new(v)
            })
            .collect();
        KPartitePartition::new(components)
    }

    /// The type with the cycle containing `n` marked.
    pub fn marked_type_of(&self) -> MarkedKPartitePartition {
        let n = self.n();
        assert!(n >= 1, "marked type needs n >= 1");
        let cycle = self.perm.cycle_through(n);
        let sum = self.cycle_sum(&cycle).unwrap();
        MarkedKPartitePartition::new(self.type_of(), sum, cycle.len())
    }

    /// Embeds into `Z_k ≀ S_m` for `m ≥ n`, fixing the new points with
    /// color 0.
    pub fn embed(&self, m: usize) -> WreathElement {
        assert!(m >= self.n());
        let mut colors = self.colors.clone();
        colors.resize(m, 0);
        let mut images = self.perm.images.clone();
        images.extend(self.n() + 1..=m);
        WreathElement {
            k: self.k,
            colors,
            perm: Permutation { images },
        }
    }

    /// Renders as `c_1,...,c_n ; i_1,...,i_n`.
    pub fn render(&self) -> String {
        let colors: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        format!("{} ; {}", colors.join(","), self.perm)
    }

    /// Parses [`render`](Self::render)'s format; the permutation side also
    /// accepts cycle notation like `(1,4)(2,5)(3)`.
    pub fn parse(k: usize, s: &str) -> Result<WreathElement> {
        let (colors_str, perm_str) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse("expected \"colors ; permutation\"".into()))?;
        let colors: Vec<usize> = colors_str
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad color {t:?}")))
            })
            .collect::<Result<_>>()?;
        let n = colors.len();
        if colors.iter().any(|&c| c >= k) {
            return Err(Error::Parse(format!("colors must lie in 0..{k}")));
        }
        let perm_str = perm_str.trim();
        let perm = if perm_str.starts_with('(') {
            let mut cycles = Vec::new();
            for chunk in perm_str.split(')') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let chunk = chunk
                    .strip_prefix('(')
                    .ok_or_else(|| Error::Parse(format!("bad cycle {chunk:?}")))?;
                let cycle: Vec<usize> = chunk
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad point {t:?}")))
                    })
                    .collect::<Result<_>>()?;
                cycles.push(cycle);
            }
            Permutation::from_cycles(n, &cycles)?
        } else {
            let images: Vec<usize> = perm_str
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad image {t:?}")))
                })
                .collect::<Result<_>>()?;
            if images.len() != n {
                return Err(Error::Parse(format!(
                    "{} colors but {} images",
                    n,
                    images.len()
                )));
            }
            let mut seen = vec![false; n + 1];
            for &v in &images {
                if v < 1 || v > n || seen[v] {
                    return Err(Error::Parse(format!("images are not a bijection: {images:?}")));
                }
                seen[v] = true;
            }
            Permutation { images }
        };
        Ok(WreathElement::new(k, colors, perm))
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// `|Z_k ≀ S_n| = k^n · n!`.
pub fn group_order(k: usize, n: usize) -> BigUint {
    let mut order = BigUint::from(k).pow(n as u32);
    for i in 2..=n {
        order *= BigUint::from(i);
    }
    order
}

/// Centralizer order `Z_Λ = ∏_i z_{λ_i} · k^{ℓ(λ_i)}` of an element of
/// type `Λ` (each conjugacy class of `Z_k` is a singleton, so `ξ_c = k`).
pub fn centralizer_order(shape: &KPartitePartition, k: usize) -> BigUint {
    assert_eq!(shape.k(), k);
    let mut z = BigUint::one();
    for p in shape.components() {
        z *= p.z_value();
        z *= BigUint::from(k).pow(p.len() as u32);
    }
    z
}

/// `|C_Λ| = k^n n! / Z_Λ`.
pub fn class_size(shape: &KPartitePartition, k: usize) -> BigUint {
    let order = group_order(k, shape.size());
    let (q, r) = order.div_rem(&centralizer_order(shape, k));
    assert!(r.is_zero(), "centralizer order must divide the group order");
    q
}

/// Size of the K-conjugacy class of a marked type:
/// `|C_Λ| · j · m_j(λ_i) / n` for mark `(j, i)`.
pub fn k_class_size(marked: &MarkedKPartitePartition, k: usize) -> BigUint {
    let n = marked.size();
    let j = marked.marked_part();
    let mult = marked
        .base()
        .component(marked.marked_component())
        .multiplicity(j);
    let numer = class_size(marked.base(), k) * BigUint::from(j) * BigUint::from(mult);
    let (q, r) = numer.div_rem(&BigUint::from(n));
    assert!(r.is_zero(), "K-class size must be an integer");
    q
}

/// Canonical representative of the conjugacy class `C_Λ`: cycles laid out
/// on consecutive position blocks (components ascending, parts descending),
/// each cycle's minimum carrying the cycle sum as its color.
pub fn class_representative(shape: &KPartitePartition, k: usize) -> WreathElement {
    let mut cycles: Vec<(usize, usize)> = Vec::new();
    for (sum, p) in shape.components().iter().enumerate() {
        for &len in p.parts() {
            cycles.push((len, sum));
        }
    }
    build_from_cycle_blocks(k, shape.size(), &cycles)
}

/// Canonical representative of the K-class `C_{Λ^{(j,i)}}`: as
/// [`class_representative`], with the marked cycle placed last so that it
/// contains `n`.
pub fn k_class_representative(marked: &MarkedKPartitePartition, k: usize) -> WreathElement {
    let mut cycles: Vec<(usize, usize)> = Vec::new();
    for (sum, p) in marked.base().components().iter().enumerate() {
        let mut skipped_mark = false;
        for &len in p.parts() {
            if !skipped_mark && sum == marked.marked_component() && len == marked.marked_part() {
                skipped_mark = true;
                continue;
            }
            cycles.push((len, sum));
        }
    }
    cycles.push((marked.marked_part(), marked.marked_component()));
    build_from_cycle_blocks(k, marked.size(), &cycles)
}

fn build_from_cycle_blocks(k: usize, n: usize, cycles: &[(usize, usize)]) -> WreathElement {
    let mut colors = vec![0; n];
    let mut images: Vec<usize> = (1..=n).collect();
    let mut start = 1;
    for &(len, sum) in cycles {
        for offset in 0..len {
            let point = start + offset;
            images[point - 1] = if offset + 1 == len { start } else { point + 1 };
        }
        colors[start - 1] = sum % k;
        start += len;
    }
    assert_eq!(start, n + 1);
    WreathElement::new(k, colors, Permutation { images })
}

/// Streams every element of `Z_k ≀ S_n` exactly once, refusing groups
/// larger than `cap`.
pub fn enumerate_group(
    n: usize,
    k: usize,
    cap: u64,
) -> Result<impl Iterator<Item = WreathElement>> {
    let size = group_order(k, n);
    if size > BigUint::from(cap) {
        return Err(Error::CapExceeded { size, cap });
    }
    let iter = (1..=n).permutations(n).flat_map(move |images| {
        let perm = Permutation::new(images);
        ColorCounter::new(k, n).map(move |colors| WreathElement::new(k, colors, perm.clone()))
    });
    Ok(iter)
}

/// Base-`k` counter over color vectors of length `n`.
struct ColorCounter {
    k: usize,
    next: Option<Vec<usize>>,
}

impl ColorCounter {
    fn new(k: usize, n: usize) -> Self {
        ColorCounter {
            k,
            next: Some(vec![0; n]),
        }
    }
}

impl Iterator for ColorCounter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for digit in succ.iter_mut().rev() {
            *digit += 1;
            if *digit < self.k {
                self.next = Some(succ);
                return Some(current);
            }
            *digit = 0;
        }
        // Wrapped around: `current` was the last vector.
        Some(current)
    }
}

/// Finds `z ∈ Z_k ≀ S_{n-1}` (fixing `n`, color 0 at `n`) with
/// `y = z⁻¹ x z`, or `None` when the marked types differ.
///
/// Construction, following the class-equivalence proof: match cycles of
/// equal length and cycle sum (the cycles through `n` to each other,
/// aligned at `n`), then solve `f_i - f_{t(p⁻¹(t⁻¹(i)))} = h_i - g_{t⁻¹(i)}`
/// by prefix summation around each cycle with free constants 0 and `f_n = 0`.
pub fn find_k_conjugator(x: &WreathElement, y: &WreathElement) -> Option<WreathElement> {
    assert_eq!(x.k(), y.k(), "k mismatch");
    assert_eq!(x.n(), y.n(), "degree mismatch");
    let n = x.n();
    let k = x.k();
    if x.marked_type_of() != y.marked_type_of() {
        return None;
    }

    // Group cycles by (length, cycle sum); the marked-type equality makes
    // the groups correspond one to one once the n-cycles are paired off.
    let mut x_groups: HashMap<(usize, usize), Vec<Vec<usize>>> = HashMap::new();
    let mut y_groups: HashMap<(usize, usize), Vec<Vec<usize>>> = HashMap::new();
    for cycle in x.perm.cycles() {
        if cycle.contains(&n) {
            continue;
        }
        let key = (cycle.len(), x.cycle_sum(&cycle).unwrap());
        x_groups.entry(key).or_default().push(cycle);
    }
    for cycle in y.perm.cycles() {
        if cycle.contains(&n) {
            continue;
        }
        let key = (cycle.len(), y.cycle_sum(&cycle).unwrap());
        y_groups.entry(key).or_default().push(cycle);
    }

    let mut t_images = vec![0usize; n];
    let mut assign = |from: &[usize], to: &[usize]| {
        for (&a, &b) in from.iter().zip(to) {
            t_images[a - 1] = b;
        }
    };
    assign(&x.perm.cycle_through(n), &y.perm.cycle_through(n));
    for (key, x_cycles) in x_groups.iter().sorted_by_key(|entry| *entry.0) {
        let y_cycles = &y_groups[key];
        for (cx, cy) in x_cycles.iter().zip(y_cycles) {
            assign(cx, cy);
        }
    }
    let t = Permutation::new(t_images);

    // Walk each cycle of i ↦ t(p⁻¹(t⁻¹(i))), rooting at n where possible;
    // equal cycle sums make the walk consistent.
    let t_inv = t.inverse();
    let p_inv = x.perm.inverse();
    let m = |i: usize| t.apply(p_inv.apply(t_inv.apply(i)));
    let rhs = |i: usize| (k + y.colors[i - 1] - x.colors[t_inv.apply(i) - 1]) % k;
    let mut f = vec![usize::MAX; n];
    for root in (1..=n).rev() {
        if f[root - 1] != usize::MAX {
            continue;
        }
        f[root - 1] = 0;
        let mut i = root;
        loop {
            let j = m(i);
            if j == root {
                assert_eq!((f[i - 1] + k - rhs(i)) % k, 0, "inconsistent cycle system");
                break;
            }
            f[j - 1] = (f[i - 1] + k - rhs(i)) % k;
            i = j;
        }
    }

    let z = WreathElement::new(k, f, t);
    debug_assert_eq!(z.perm.apply(n), n);
    debug_assert_eq!(z.colors[n - 1], 0);
    let conj = z.inverse().multiply(x).multiply(&z);
    assert_eq!(&conj, y, "conjugator construction failed");
    Some(z)
}

/// Exhaustively checks that every element is K-conjugate to its inverse:
/// equal marked types, plus a verified explicit conjugator.
pub fn verify_symmetric_gelfand(n: usize, k: usize, cap: u64) -> Result<bool> {
    for x in enumerate_group(n, k, cap)? {
        let inv = x.inverse();
        if x.marked_type_of() != inv.marked_type_of() {
            return Ok(false);
        }
        if find_k_conjugator(&x, &inv).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use std::collections::HashSet;

    fn example_x() -> WreathElement {
        // k=3, n=10, colors (1,1,2,0,1,1,1,2,1,0), perm (1,4)(2,5)(3)(6)(7,8,9)(10).
        WreathElement::parse(3, "1,1,2,0,1,1,1,2,1,0 ; 4,5,3,1,2,6,8,9,7,10").unwrap()
    }

    fn example_y() -> WreathElement {
        WreathElement::parse(3, "0,1,1,0,1,2,1,0,0,1 ; (1,3,7)(2)(10,9,4,8,5,6)").unwrap()
    }

    #[test]
    fn worked_product_and_inverse() {
        let x = example_x();
        let y = example_y();
        let xy = x.multiply(&y);
        let expected =
            WreathElement::parse(3, "1,2,2,1,0,0,0,0,0,2 ; (1,8,4,3,7,5,2,6,10,9)").unwrap();
        assert_eq!(xy, expected);

        let y_inv = y.inverse();
        let expected_inv =
            WreathElement::parse(3, "2,2,2,0,1,2,0,2,0,0 ; (1,7,3)(2)(10,6,5,8,4,9)").unwrap();
        assert_eq!(y_inv, expected_inv);

        let id = WreathElement::identity(3, 10);
        assert_eq!(x.multiply(&id), x);
        assert_eq!(x.multiply(&x.inverse()), id);
        assert_eq!(x.inverse().inverse(), x);
    }

    #[test]
    fn worked_conjugation_and_marked_type() {
        let x = example_x();
        let y = example_y();
        let conj = x.multiply(&y).multiply(&x.inverse());
        let expected =
            WreathElement::parse(3, "1,2,0,0,1,2,1,2,2,2 ; (1,7,2,6,10,8)(4,3,9)(5)").unwrap();
        assert_eq!(conj, expected);
        assert_eq!(conj.marked_type_of().to_string(), "-|6*,1|3");
        assert_eq!(conj.marked_type_of(), y.marked_type_of());
    }

    #[test]
    fn cycle_sums_and_types() {
        // The element with the 4-cycle (7,8,9,10).
        let x = WreathElement::parse(3, "1,1,2,0,1,1,1,2,1,0 ; (1,4)(2,5)(3)(6)(7,8,9,10)").unwrap();
        assert_eq!(x.cycle_sum(&[7, 8, 9, 10]).unwrap(), 1);
        assert_eq!(x.cycle_sum(&[2, 5]).unwrap(), 2);
        assert!(x.cycle_sum(&[1, 2]).is_err());
        assert_eq!(x.type_of().to_string(), "-|4,2,1|2,1");
        assert_eq!(x.marked_type_of().to_string(), "-|4*,2,1|2,1");

        let id = WreathElement::identity(2, 3);
        assert_eq!(id.type_of().to_string(), "1,1,1|-");
        let m = id.marked_type_of();
        assert_eq!((m.marked_component(), m.marked_part()), (0, 1));

        let fixed = WreathElement::identity(4, 5);
        assert_eq!(fixed.cycle_sum(&[2]).unwrap(), 0);
    }

    #[test]
    fn type_is_inversion_invariant_exhaustively() {
        for x in enumerate_group(4, 3, 10_000_000).unwrap() {
            assert_eq!(x.type_of(), x.inverse().type_of());
        }
    }

    #[test]
    fn centralizer_and_class_sizes() {
        let id3 = KPartitePartition::parse("1,1,1|-").unwrap();
        assert_eq!(centralizer_order(&id3, 2), BigUint::from(48u32));
        for n in 1..=6usize {
            let shape = KPartitePartition::new(vec![
                Partition::empty(),
                Partition::new(vec![n]),
            ]);
            assert_eq!(centralizer_order(&shape, 2), BigUint::from(2 * n));
        }
        // Class sizes sum to the group order.
        let total: BigUint = KPartitePartition::all(3, 2)
            .iter()
            .map(|shape| class_size(shape, 2))
            .sum();
        assert_eq!(total, group_order(2, 3));
    }

    #[test]
    fn k_class_sizes_from_tables() {
        let c3 = MarkedKPartitePartition::parse("3*").unwrap();
        assert_eq!(k_class_size(&c3, 1), BigUint::from(2u32));
        let c2 = MarkedKPartitePartition::parse("2*|-").unwrap();
        assert_eq!(k_class_size(&c2, 2), BigUint::from(2u32));
        let c33 = MarkedKPartitePartition::parse("-|3*").unwrap();
        assert_eq!(k_class_size(&c33, 2), BigUint::from(8u32));
    }

    #[test]
    fn k_class_sizes_match_brute_force_partition() {
        for (k, n) in [(1usize, 4usize), (2, 3), (3, 3)] {
            let mut counts: HashMap<MarkedKPartitePartition, BigUint> = HashMap::new();
            for x in enumerate_group(n, k, 10_000_000).unwrap() {
                *counts.entry(x.marked_type_of()).or_default() += BigUint::one();
            }
            let marked = MarkedKPartitePartition::all(n, k);
            assert_eq!(counts.len(), marked.len());
            let mut total = BigUint::zero();
            for m in &marked {
                let size = k_class_size(m, k);
                assert_eq!(counts[m], size, "class {m}");
                total += size;
            }
            assert_eq!(total, group_order(k, n));
        }
    }

    #[test]
    fn worked_conjugator_example() {
        let x = WreathElement::parse(3, "1,0,2,1,1,0,2 ; (1,2,3)(4,5)(6,7)").unwrap();
        let y = WreathElement::parse(3, "0,2,1,0,0,0,1 ; (1,4,5)(2,6)(3,7)").unwrap();
        assert_eq!(x.marked_type_of().to_string(), "3|-|2,2*");
        assert_eq!(y.marked_type_of().to_string(), "3|-|2,2*");
        let z = find_k_conjugator(&x, &y).expect("same marked type");
        assert_eq!(z.perm().apply(7), 7);
        assert_eq!(z.colors()[6], 0);
        assert_eq!(z.inverse().multiply(&x).multiply(&z), y);
        // The paper's solution is also a valid conjugator.
        let paper_z = WreathElement::parse(3, "1,1,1,1,2,0,0 ; (1)(2,4)(3,5,6)(7)").unwrap();
        assert_eq!(paper_z.inverse().multiply(&x).multiply(&paper_z), y);
    }

    #[test]
    fn conjugator_exists_for_self_and_inverse() {
        for x in enumerate_group(3, 2, 10_000_000).unwrap() {
            let z = find_k_conjugator(&x, &x).expect("x is K-conjugate to itself");
            assert_eq!(z.inverse().multiply(&x).multiply(&z), x);
            assert!(find_k_conjugator(&x, &x.inverse()).is_some());
        }
    }

    #[test]
    fn conjugator_absent_iff_marked_types_differ() {
        let elements: Vec<_> = enumerate_group(3, 2, 10_000_000).unwrap().collect();
        for x in elements.iter().take(12) {
            for y in &elements {
                let found = find_k_conjugator(x, y).is_some();
                assert_eq!(found, x.marked_type_of() == y.marked_type_of());
            }
        }
    }

    #[test]
    fn enumeration_counts_and_cap() {
        assert_eq!(enumerate_group(2, 2, 100).unwrap().count(), 8);
        assert_eq!(enumerate_group(3, 3, 1000).unwrap().count(), 162);
        assert_eq!(enumerate_group(1, 1, 10).unwrap().count(), 1);
        assert!(matches!(
            enumerate_group(10, 3, 1000),
            Err(Error::CapExceeded { .. })
        ));
        // Every element exactly once.
        let all: Vec<_> = enumerate_group(3, 2, 1000).unwrap().collect();
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(all.len(), set.len());
    }

    #[test]
    fn symmetric_gelfand_property_small_groups() {
        assert!(verify_symmetric_gelfand(3, 2, 10_000_000).unwrap());
        assert!(verify_symmetric_gelfand(3, 3, 10_000_000).unwrap());
        assert!(verify_symmetric_gelfand(1, 1, 10_000_000).unwrap());
    }

    #[test]
    fn representatives_have_their_marked_type() {
        for (k, n) in [(2usize, 3usize), (3, 2), (1, 4)] {
            for m in MarkedKPartitePartition::all(n, k) {
                let rep = k_class_representative(&m, k);
                assert_eq!(rep.marked_type_of(), m, "marked shape {m}");
            }
            for shape in KPartitePartition::all(n, k) {
                let rep = class_representative(&shape, k);
                assert_eq!(rep.type_of(), shape, "shape {shape}");
            }
        }
    }

    fn random_element(rng: &mut StdRng, k: usize, n: usize) -> WreathElement {
        let mut images: Vec<usize> = (1..=n).collect();
        images.shuffle(rng);
        let colors = (0..n).map(|_| rng.gen_range(0..k)).collect();
        WreathElement::new(k, colors, Permutation::new(images))
    }

    #[test]
    fn group_axioms_on_random_triples() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for (k, n) in [(2usize, 3usize), (3, 4)] {
            let id = WreathElement::identity(k, n);
            for _ in 0..200 {
                let a = random_element(&mut rng, k, n);
                let b = random_element(&mut rng, k, n);
                let c = random_element(&mut rng, k, n);
                assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
                assert_eq!(a.multiply(&a.inverse()), id);
                assert_eq!(a.inverse().multiply(&a), id);
            }
        }
    }

    #[test]
    fn element_format_round_trips() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let x = random_element(&mut rng, 3, 6);
            assert_eq!(WreathElement::parse(3, &x.render()).unwrap(), x);
        }
        let from_cycles = WreathElement::parse(2, "1,0,1 ; (1,2)").unwrap();
        assert_eq!(from_cycles.perm().apply(3), 3);
        assert!(WreathElement::parse(2, "1,0 ; 1,1").is_err());
        assert!(WreathElement::parse(2, "2,0 ; 1,2").is_err());
        assert!(WreathElement::parse(2, "1,0").is_err());
    }
}
