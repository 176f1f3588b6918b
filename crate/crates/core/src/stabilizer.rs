//! Exact one- and two-qudit stabilizer states and the standard families.
//!
//! A state is stored as its full stabilizer group: `d^n` pairs
//! `(key, phase)` sorted by the unsigned Pauli key, where `phase` is the
//! exponent of `zeta` in front of `P_(x|z)`. The group determines the state,
//! so equality, hashing and orthogonality are exact.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::clifford::{clifford_unitary, CliffordElement, CliffordGroup};
use crate::linalg::{DenseMatrix, C64};
use crate::modular::PrimeDim;
use crate::pauli::{identify_pauli, symplectic_commutes, SymplecticPauli};
use crate::{Error, Result};

/// Largest `d` enumerated by default.
pub const DEFAULT_ENUMERATION_CAP: u32 = 7;

#[derive(Clone, Debug)]
pub struct StabilizerState {
    d: PrimeDim,
    n: usize,
    generators: Vec<SymplecticPauli>,
    elements: Vec<(u32, u32)>,
    label: String,
}

impl PartialEq for StabilizerState {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.n == other.n && self.elements == other.elements
    }
}

impl Eq for StabilizerState {}

impl core::hash::Hash for StabilizerState {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.d.hash(state);
        self.elements.hash(state);
    }
}

impl StabilizerState {
    /// Builds the state stabilized by `generators` (exactly `n` of them).
    pub fn from_generators(generators: &[SymplecticPauli], label: impl Into<String>) -> Result<Self> {
        let first = generators
            .first()
            .ok_or(Error::InvalidStabilizer("no generators"))?;
        let (d, n) = (first.dim(), first.n());
        if generators.len() != n {
            return Err(Error::InvalidStabilizer("need exactly n generators"));
        }
        for g in generators {
            if g.dim() != d || g.n() != n {
                return Err(Error::ShapeMismatch);
            }
            if d.is_qubit() && g.phase() % 2 != 0 {
                return Err(Error::InvalidStabilizer("qubit generator is not Hermitian"));
            }
        }
        for (i, g) in generators.iter().enumerate() {
            for h in &generators[i + 1..] {
                if !symplectic_commutes(g, h)? {
                    return Err(Error::InvalidStabilizer("generators do not commute"));
                }
            }
        }

        let mut group = vec![SymplecticPauli::identity(d, n)];
        for g in generators {
            let mut next = Vec::with_capacity(group.len() * d.get() as usize);
            for e in &group {
                let mut acc = e.clone();
                for _ in 0..d.get() {
                    next.push(acc.clone());
                    acc = acc.mul(g)?;
                }
            }
            group = next;
        }
        let mut elements: Vec<(u32, u32)> = group.iter().map(|p| (p.key(), p.phase())).collect();
        elements.sort_unstable();
        for w in elements.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(if w[0].1 == w[1].1 {
                    Error::InvalidStabilizer("generators are not independent")
                } else {
                    Error::InvalidStabilizer("group contains a nontrivial multiple of the identity")
                });
            }
        }
        if elements[0] != (0, 0) {
            return Err(Error::InvalidStabilizer("group contains a nontrivial multiple of the identity"));
        }
        if d.is_qubit() && elements.iter().any(|&(_, ph)| ph % 2 != 0) {
            return Err(Error::InvalidStabilizer("qubit group element is not Hermitian"));
        }

        let canonical = canonical_generators(d, n, generators, &elements);
        Ok(StabilizerState {
            d,
            n,
            generators: canonical,
            elements,
            label: label.into(),
        })
    }

    /// Eigenstate of the single-qudit Pauli `P_(x|z)` with eigenvalue `omega^k`.
    pub fn single(d: PrimeDim, x: u32, z: u32, k: u32) -> Result<Self> {
        let p = SymplecticPauli::single(d, x, z);
        // stabilized by omega^{-k} P
        let phase = d.omega_step() * d.neg(k % d.get());
        let label = format!("({}|{})[{}]", x % d.get(), z % d.get(), k % d.get());
        Self::from_generators(&[p.with_phase(phase)], label)
    }

    /// `self (x) other`.
    pub fn tensor(&self, other: &StabilizerState) -> Result<Self> {
        if self.d != other.d {
            return Err(Error::ShapeMismatch);
        }
        let gens: Vec<SymplecticPauli> = self
            .generators
            .iter()
            .map(|g| g.tensor(&SymplecticPauli::identity(self.d, other.n)))
            .chain(
                other
                    .generators
                    .iter()
                    .map(|g| SymplecticPauli::identity(self.d, self.n).tensor(g)),
            )
            .collect::<Result<_>>()?;
        Self::from_generators(&gens, format!("{} x {}", self.label, other.label))
    }

    /// The Jamiolkowski state `(I (x) C)|Phi>`, stabilized by
    /// `X (x) C X C^dagger` and `Z (x) C Z^{-1} C^dagger`.
    pub fn jamiolkowski(c: &CliffordElement, d: PrimeDim) -> Result<Self> {
        let u = clifford_unitary(c, d);
        let ud = u.adjoint();
        let conj = |p: SymplecticPauli| -> Result<SymplecticPauli> {
            let m = u.mul(&p.matrix()?).mul(&ud);
            identify_pauli(&m, d, 1).ok_or(Error::InvalidStabilizer("conjugate is not a Pauli"))
        };
        let x = SymplecticPauli::single(d, 1, 0);
        let zinv = SymplecticPauli::single(d, 0, d.neg(1));
        let g1 = x.tensor(&conj(x.clone())?)?;
        let g2 = SymplecticPauli::single(d, 0, 1).tensor(&conj(zinv)?)?;
        Self::from_generators(&[g1, g2], format!("J{c}"))
    }

    pub fn dim(&self) -> PrimeDim {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[SymplecticPauli] {
        &self.generators
    }

    /// The stabilizer group as sorted `(key, phase)` pairs.
    pub fn elements(&self) -> &[(u32, u32)] {
        &self.elements
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The unsigned keys of the group: the Lagrangian subspace.
    pub fn subspace(&self) -> Vec<u32> {
        self.elements.iter().map(|&(k, _)| k).collect()
    }

    /// Is every element `omega^{2^{-1} x.z} X^x Z^z`? Odd `d` only.
    pub fn has_zero_weyl_phases(&self) -> Result<bool> {
        let d = self.d;
        let h = d.half()?;
        let p = d.get();
        Ok(self.elements.iter().all(|&(key, phase)| {
            let (x, z) = split_key(key, p, self.n);
            let xz: u64 = x.iter().zip(&z).map(|(&a, &b)| (a * b) as u64).sum();
            phase == d.mul(h, (xz % p as u64) as u32)
        }))
    }

    /// Dense projector `d^{-n} sum_{g in S} g`.
    pub fn projector(&self) -> Result<DenseMatrix> {
        let p = self.d.get();
        let dim = (p as usize).pow(self.n as u32);
        let mut acc = DenseMatrix::zeros(dim);
        for &(key, phase) in &self.elements {
            let (x, z) = split_key(key, p, self.n);
            let g = SymplecticPauli::new(self.d, x, z, phase)?;
            acc.add_assign(&g.matrix()?);
        }
        Ok(acc.scale(C64::new(1.0 / dim as f64, 0.0)))
    }

    /// Number of unsigned Paulis shared by both groups.
    pub fn common_order(&self, other: &StabilizerState) -> Result<usize> {
        self.check_shape(other)?;
        Ok(merge(&self.elements, &other.elements).0)
    }

    /// `Tr(Pi_s Pi_t)`, exactly `|S cap T| / d^n` or zero.
    pub fn overlap(&self, other: &StabilizerState) -> Result<f64> {
        self.check_shape(other)?;
        let (common, clash) = merge(&self.elements, &other.elements);
        Ok(if clash {
            0.0
        } else {
            common as f64 / self.elements.len() as f64
        })
    }

    fn check_shape(&self, other: &StabilizerState) -> Result<()> {
        if self.d != other.d || self.n != other.n {
            return Err(Error::ShapeMismatch);
        }
        Ok(())
    }
}

impl fmt::Display for StabilizerState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// `Tr(Pi_s Pi_t) = 0`, decided from the stabilizer groups.
pub fn is_orthogonal(s: &StabilizerState, t: &StabilizerState) -> Result<bool> {
    s.check_shape(t)?;
    Ok(merge(&s.elements, &t.elements).1)
}

/// (number of shared keys, whether some shared key has different phases)
fn merge(a: &[(u32, u32)], b: &[(u32, u32)]) -> (usize, bool) {
    let (mut i, mut j) = (0, 0);
    let mut common = 0;
    let mut clash = false;
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                common += 1;
                clash |= a[i].1 != b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    (common, clash)
}

fn split_key(mut key: u32, p: u32, n: usize) -> (Vec<u32>, Vec<u32>) {
    let mut digits = vec![0u32; 2 * n];
    for s in (0..2 * n).rev() {
        digits[s] = key % p;
        key /= p;
    }
    let z = digits.split_off(n);
    (digits, z)
}

/// Reduced row echelon basis of the generator span, columns in
/// `x_1..x_n, z_1..z_n` order, with phases read off the group table.
fn canonical_generators(
    d: PrimeDim,
    n: usize,
    generators: &[SymplecticPauli],
    elements: &[(u32, u32)],
) -> Vec<SymplecticPauli> {
    let mut rows: Vec<Vec<u32>> = generators
        .iter()
        .map(|g| g.x().iter().chain(g.z()).copied().collect())
        .collect();
    let cols = 2 * n;
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = d.inv(rows[r][c]).expect("nonzero pivot");
        for v in rows[r].iter_mut() {
            *v = d.mul(*v, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for k in 0..cols {
                    let sub = d.mul(f, rows[r][k]);
                    rows[i][k] = d.sub(rows[i][k], sub);
                }
            }
        }
        r += 1;
    }
    rows.into_iter()
        .map(|row| {
            let key = row.iter().fold(0u32, |acc, &v| acc * d.get() + v);
            let phase = elements
                .binary_search_by_key(&key, |&(k, _)| k)
                .map(|i| elements[i].1)
                .expect("row lies in the group");
            let mut row = row;
            let z = row.split_off(n);
            SymplecticPauli::new(d, row, z, phase).expect("shape")
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Single,
    Separable,
    Entangled,
    Total,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Single => "single",
            FamilyKind::Separable => "sep",
            FamilyKind::Entangled => "ent",
            FamilyKind::Total => "tot",
        }
    }

    /// Closed-form family size.
    pub fn expected_count(self, d: PrimeDim) -> usize {
        let p = d.get() as usize;
        match self {
            FamilyKind::Single => p * (p + 1),
            FamilyKind::Separable => (p * (p + 1)).pow(2),
            FamilyKind::Entangled => p.pow(3) * (p * p - 1),
            FamilyKind::Total => p * p * (p * p + 1) * (p + 1),
        }
    }

    /// Hilbert-space dimension the states live in.
    pub fn hilbert_dim(self, d: PrimeDim) -> usize {
        let p = d.get() as usize;
        match self {
            FamilyKind::Single => p,
            _ => p * p,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "single" => Ok(FamilyKind::Single),
            "sep" | "separable" => Ok(FamilyKind::Separable),
            "ent" | "entangled" => Ok(FamilyKind::Entangled),
            "tot" | "total" => Ok(FamilyKind::Total),
            _ => Err(Error::Parse(format!("unknown family '{s}'"))),
        }
    }
}

/// A list of states in construction order.
///
/// * single: basis `(0|1)` then `(1|0), (1|1), ..., (1|d-1)`, eigenvalue
///   index inner;
/// * separable: `single[i] (x) single[j]` at index `i * d(d+1) + j`;
/// * entangled: Jamiolkowski state of Clifford element `i` at index `i`;
/// * total: separable followed by entangled.
#[derive(Clone, Debug)]
pub struct StateFamily {
    pub kind: FamilyKind,
    pub d: PrimeDim,
    pub states: Vec<StabilizerState>,
}

impl StateFamily {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.states.iter().map(|s| s.label.clone()).collect()
    }

    pub fn hilbert_dim(&self) -> usize {
        self.kind.hilbert_dim(self.d)
    }
}

/// The `(x|z)` labels of the `d + 1` MUB operators, in basis order.
pub fn mub_operators(d: PrimeDim) -> Vec<(u32, u32)> {
    let mut out = vec![(0, 1)];
    out.extend((0..d.get()).map(|z| (1, z)));
    out
}

pub fn enumerate_single(d: PrimeDim) -> StateFamily {
    let mut states = Vec::new();
    for (x, z) in mub_operators(d) {
        for k in 0..d.get() {
            states.push(StabilizerState::single(d, x, z, k).expect("MUB eigenstate"));
        }
    }
    StateFamily {
        kind: FamilyKind::Single,
        d,
        states,
    }
}

pub fn enumerate_two_qudit(d: PrimeDim, kind: FamilyKind) -> Result<StateFamily> {
    enumerate_two_qudit_with_cap(d, kind, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_two_qudit_with_cap(d: PrimeDim, kind: FamilyKind, cap: u32) -> Result<StateFamily> {
    if d.get() > cap {
        return Err(Error::BudgetExceeded(format!(
            "enumeration of two-qudit states at d = {d} exceeds the cap d <= {cap}"
        )));
    }
    let states = match kind {
        FamilyKind::Single => return Err(Error::ShapeMismatch),
        FamilyKind::Separable => separable_states(d)?,
        FamilyKind::Entangled => entangled_states(d)?,
        FamilyKind::Total => {
            let mut s = separable_states(d)?;
            s.extend(entangled_states(d)?);
            s
        }
    };
    Ok(StateFamily { kind, d, states })
}

fn separable_states(d: PrimeDim) -> Result<Vec<StabilizerState>> {
    let single = enumerate_single(d).states;
    let mut out = Vec::with_capacity(single.len() * single.len());
    for a in &single {
        for b in &single {
            out.push(a.tensor(b)?);
        }
    }
    Ok(out)
}

fn entangled_states(d: PrimeDim) -> Result<Vec<StabilizerState>> {
    let group = CliffordGroup::new(d);
    let states: Vec<StabilizerState> = group
        .elements()
        .map(|c| StabilizerState::jamiolkowski(&c, d))
        .collect::<Result<_>>()?;
    let mut keys: Vec<&[(u32, u32)]> = states.iter().map(|s| s.elements()).collect();
    keys.sort_unstable();
    if keys.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidStabilizer("Jamiolkowski map is not injective"));
    }
    Ok(states)
}

/// Groups states by their unsigned stabilizer subspace. Each group is a
/// set of mutually orthogonal states, so the result is a clique cover of
/// the orthogonality graph. Groups are ordered by first member.
pub fn partition_by_subspace(family: &StateFamily) -> Vec<Vec<usize>> {
    let mut index: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, s) in family.states.iter().enumerate() {
        let g = *index.entry(s.subspace()).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(i);
    }
    groups
}

/// States with zero Weyl phases: one per subspace, pairwise non-orthogonal
/// (an independent set). Odd `d` only.
pub fn zero_weyl_phase_states(family: &StateFamily) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, s) in family.states.iter().enumerate() {
        if s.has_zero_weyl_phases()? {
            out.push(i);
        }
    }
    Ok(out)
}

/// Dense phase lookup for fast all-pairs orthogonality over one family.
#[derive(Clone, Debug)]
pub struct PhaseTable {
    keys: usize,
    /// `phase + 1` at `[state * keys + key]`, 0 if the key is absent
    table: Vec<u8>,
    elements: Vec<Vec<(u32, u32)>>,
}

impl PhaseTable {
    pub fn new(family: &StateFamily) -> Self {
        let n = family.states.first().map_or(1, |s| s.n);
        let keys = (family.d.get() as usize).pow(2 * n as u32);
        let mut table = vec![0u8; keys * family.len()];
        for (i, s) in family.states.iter().enumerate() {
            for &(k, ph) in &s.elements {
                table[i * keys + k as usize] = ph as u8 + 1;
            }
        }
        PhaseTable {
            keys,
            table,
            elements: family.states.iter().map(|s| s.elements.clone()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    #[inline]
    pub fn orthogonal(&self, i: usize, j: usize) -> bool {
        let row = &self.table[j * self.keys..(j + 1) * self.keys];
        self.elements[i].iter().skip(1).any(|&(k, ph)| {
            let other = row[k as usize];
            other != 0 && other != ph as u8 + 1
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(d: u32) -> PrimeDim {
        PrimeDim::new(d).unwrap()
    }

    #[test]
    fn single_counts_and_overlaps() {
        for p in [2u32, 3, 5, 7] {
            let fam = enumerate_single(dim(p));
            assert_eq!(fam.len(), (p * (p + 1)) as usize);
            for (i, s) in fam.states.iter().enumerate() {
                for (j, t) in fam.states.iter().enumerate() {
                    let same_basis = i / p as usize == j / p as usize;
                    let want = if i == j {
                        1.0
                    } else if same_basis {
                        0.0
                    } else {
                        1.0 / p as f64
                    };
                    assert!((s.overlap(t).unwrap() - want).abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn qubit_single_states_are_pauli_eigenstates() {
        let fam = enumerate_single(dim(2));
        let labels = fam.labels();
        assert_eq!(labels, ["(0|1)[0]", "(0|1)[1]", "(1|0)[0]", "(1|0)[1]", "(1|1)[0]", "(1|1)[1]"]);
        // (0|1)[0] is |0>, (1|0)[1] is |->
        let p0 = fam.states[0].projector().unwrap();
        assert!((p0[(0, 0)] - C64::new(1.0, 0.0)).norm() < 1e-15);
        let pm = fam.states[3].projector().unwrap();
        assert!((pm[(0, 1)] - C64::new(-0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn two_qudit_counts() {
        for (p, want) in [(2u32, (36, 24, 60)), (3, (144, 216, 360))] {
            let d = dim(p);
            let sep = enumerate_two_qudit(d, FamilyKind::Separable).unwrap();
            let ent = enumerate_two_qudit(d, FamilyKind::Entangled).unwrap();
            let tot = enumerate_two_qudit(d, FamilyKind::Total).unwrap();
            assert_eq!((sep.len(), ent.len(), tot.len()), want);
            let mut all: Vec<&[(u32, u32)]> = tot.states.iter().map(|s| s.elements()).collect();
            all.sort_unstable();
            all.dedup();
            assert_eq!(all.len(), want.2);
        }
    }

    #[test]
    fn enumeration_cap() {
        let d = dim(11);
        assert!(matches!(
            enumerate_two_qudit(d, FamilyKind::Separable),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn invalid_generators() {
        let d = dim(3);
        let x = SymplecticPauli::new(d, vec![1, 0], vec![0, 0], 0).unwrap();
        let z = SymplecticPauli::new(d, vec![0, 0], vec![1, 0], 0).unwrap();
        assert!(StabilizerState::from_generators(&[x.clone(), z], "").is_err());
        assert!(StabilizerState::from_generators(&[x.clone(), x.clone()], "").is_err());
        let q = dim(2);
        let iy = SymplecticPauli::single(q, 1, 1).with_phase(1);
        assert!(StabilizerState::from_generators(&[iy], "").is_err());
    }

    #[test]
    fn canonical_form_is_generator_independent() {
        let d = dim(3);
        let xx = SymplecticPauli::new(d, vec![1, 1], vec![0, 0], 0).unwrap();
        let zz = SymplecticPauli::new(d, vec![0, 0], vec![1, 2], 0).unwrap();
        let a = StabilizerState::from_generators(&[xx.clone(), zz.clone()], "a").unwrap();
        let prod = xx.mul(&zz).unwrap();
        let b = StabilizerState::from_generators(&[prod, zz.pow(2)], "b").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.generators(), b.generators());
    }

    #[test]
    fn bell_state_orthogonal_to_shifted_copy() {
        let d = dim(3);
        let phi = StabilizerState::jamiolkowski(&CliffordElement::identity(), d).unwrap();
        let shifted = StabilizerState::jamiolkowski(
            &CliffordElement {
                f: crate::clifford::Sl2::identity(),
                u: [1, 0],
            },
            d,
        )
        .unwrap();
        assert!(is_orthogonal(&phi, &shifted).unwrap());
        assert!(!is_orthogonal(&phi, &phi).unwrap());
        let tr = phi
            .projector()
            .unwrap()
            .trace_product(&shifted.projector().unwrap())
            .norm();
        assert!(tr < 1e-12);
    }

    #[test]
    fn jamiolkowski_projector_matches_vector() {
        for p in [2u32, 3] {
            let d = dim(p);
            let g = CliffordGroup::new(d);
            for c in g.elements().step_by(7) {
                let s = StabilizerState::jamiolkowski(&c, d).unwrap();
                let v = crate::clifford::jamiolkowski_state(&c, d).vector;
                let want = DenseMatrix::outer(&v);
                assert!(s.projector().unwrap().max_abs_diff(&want) < 1e-10);
            }
        }
    }

    #[test]
    fn subspace_partition_sizes() {
        for p in [2u32, 3] {
            let d = dim(p);
            let q = p as usize;
            let sep = enumerate_two_qudit(d, FamilyKind::Separable).unwrap();
            let ent = enumerate_two_qudit(d, FamilyKind::Entangled).unwrap();
            let ps = partition_by_subspace(&sep);
            let pe = partition_by_subspace(&ent);
            assert_eq!(ps.len(), (q + 1) * (q + 1));
            assert_eq!(pe.len(), q * (q * q - 1));
            assert!(ps.iter().chain(&pe).all(|g| g.len() == q * q));
        }
    }

    #[test]
    fn zero_phase_states_one_per_subspace() {
        let d = dim(3);
        let tot = enumerate_two_qudit(d, FamilyKind::Total).unwrap();
        let zs = zero_weyl_phase_states(&tot).unwrap();
        assert_eq!(zs.len(), 40);
        for (a, &i) in zs.iter().enumerate() {
            for &j in &zs[a + 1..] {
                assert!(!is_orthogonal(&tot.states[i], &tot.states[j]).unwrap());
            }
        }
        assert_eq!(zero_weyl_phase_states(&enumerate_single(dim(2))), Err(Error::EvenDim));
    }

    #[test]
    fn phase_table_agrees_with_merge() {
        let tot = enumerate_two_qudit(dim(2), FamilyKind::Total).unwrap();
        let t = PhaseTable::new(&tot);
        for i in 0..tot.len() {
            for j in 0..tot.len() {
                assert_eq!(
                    t.orthogonal(i, j),
                    is_orthogonal(&tot.states[i], &tot.states[j]).unwrap()
                );
            }
        }
    }
}
