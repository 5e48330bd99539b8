//! Finite motion groups `G = A ⋊ K` with `A = (Z_n)^d` and `K` given by its
//! multiplication table together with a homomorphism `K → GL_d(Z_n)`.
//!
//! Group law: `(a₁, κ₁)·(a₂, κ₂) = (a₁ + M_{κ₁} a₂, κ₁κ₂)` where `M_κ` acts on
//! column vectors. Characters `α ∈ Â ≅ (Z_n)^d` pair with `a` through
//! `⟨a, α⟩ = exp(2πi Σ a_j α_j / n)`, and `K` acts on `Â` by
//! `φ_κ(α) = α ∘ φ_{κ⁻¹}`, i.e. the row vector `α · M_{κ⁻¹}`.
//!
//! Elements are enumerated in a fixed canonical order: `a` lexicographically
//! (first coordinate most significant), then the `K` index. Haar measure is
//! counting measure.

use std::collections::VecDeque;
use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `(Z_n)^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    modulus: u64,
    rank: usize,
}

impl AbelianGroup {
    pub fn new(modulus: u64, rank: usize) -> Result<Self> {
        if modulus == 0 || rank == 0 {
            return Err(Error::InvalidParameters(format!(
                "modulus and rank must be positive (got n={modulus}, d={rank})"
            )));
        }
        Ok(Self { modulus, rank })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        (self.modulus as usize).pow(self.rank as u32)
    }

    /// Lexicographic index of a coordinate vector (first coordinate most significant).
    pub fn index_of(&self, a: &[u64]) -> usize {
        a.iter()
            .fold(0usize, |acc, &c| acc * self.modulus as usize + c as usize)
    }

    pub fn vector_at(&self, mut index: usize) -> Vec<u64> {
        let n = self.modulus as usize;
        let mut v = vec![0u64; self.rank];
        for slot in v.iter_mut().rev() {
            *slot = (index % n) as u64;
            index /= n;
        }
        v
    }

    pub fn reduce(&self, v: &[i64]) -> Vec<u64> {
        let n = self.modulus as i64;
        v.iter().map(|&c| c.rem_euclid(n) as u64).collect()
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(y)
            .map(|(&p, &q)| (p + q) % self.modulus)
            .collect()
    }

    pub fn neg(&self, x: &[u64]) -> Vec<u64> {
        x.iter()
            .map(|&p| (self.modulus - p) % self.modulus)
            .collect()
    }

    /// Exponent `e` with `⟨a, α⟩ = exp(2πi e / n)`.
    pub fn pairing_exponent(&self, a: &[u64], alpha: &[u64]) -> u64 {
        a.iter()
            .zip(alpha)
            .fold(0u64, |acc, (&p, &q)| (acc + p * q) % self.modulus)
    }

    pub fn is_valid(&self, v: &[u64]) -> bool {
        v.len() == self.rank && v.iter().all(|&c| c < self.modulus)
    }
}

/// Square integer matrix reduced mod `n`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModMatrix {
    dim: usize,
    entries: Vec<u64>,
}

impl ModMatrix {
    pub fn identity(dim: usize, modulus: u64) -> Self {
        let mut entries = vec![0u64; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1 % modulus;
        }
        Self { dim, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>], modulus: u64) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidParameters("action matrix is not square".into()));
        }
        let n = modulus as i64;
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&c| c.rem_euclid(n) as u64))
            .collect();
        Ok(Self { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.dim).map(|c| c.to_vec()).collect()
    }

    pub fn mul(&self, other: &Self, modulus: u64) -> Self {
        let d = self.dim;
        let mut entries = vec![0u64; d * d];
        for i in 0..d {
            for j in 0..d {
                let mut s = 0u64;
                for l in 0..d {
                    s = (s + self.get(i, l) * other.get(l, j)) % modulus;
                }
                entries[i * d + j] = s;
            }
        }
        Self { dim: d, entries }
    }

    /// `M v` for a column vector.
    pub fn apply(&self, v: &[u64], modulus: u64) -> Vec<u64> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim).fold(0u64, |s, j| (s + self.get(i, j) * v[j]) % modulus)
            })
            .collect()
    }

    /// `v M` for a row vector.
    pub fn apply_row(&self, v: &[u64], modulus: u64) -> Vec<u64> {
        (0..self.dim)
            .map(|j| {
                (0..self.dim).fold(0u64, |s, i| (s + v[i] * self.get(i, j)) % modulus)
            })
            .collect()
    }

    /// Determinant mod `n` by cofactor expansion (ranks here are small).
    pub fn det(&self, modulus: u64) -> u64 {
        let idx: Vec<usize> = (0..self.dim).collect();
        self.minor_det(0, &idx, modulus)
    }

    fn minor_det(&self, row: usize, cols: &[usize], modulus: u64) -> u64 {
        if cols.is_empty() {
            return 1 % modulus;
        }
        let mut acc = 0u64;
        for (pos, &c) in cols.iter().enumerate() {
            let entry = self.get(row, c);
            if entry == 0 {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry * self.minor_det(row + 1, &rest, modulus) % modulus;
            acc = if pos % 2 == 0 {
                (acc + term) % modulus
            } else {
                (acc + modulus - term) % modulus
            };
        }
        acc
    }
}

/// Finite group `K` given extensionally, with its action on `A`.
#[derive(Debug, Clone)]
pub struct KGroup {
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
    action: Vec<ModMatrix>,
}

impl KGroup {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverses[i]
    }

    pub fn action(&self, i: usize) -> &ModMatrix {
        &self.action[i]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn actions(&self) -> &[ModMatrix] {
        &self.action
    }

    fn validate_table(table: &[Vec<usize>]) -> Result<Vec<usize>> {
        let m = table.len();
        if m == 0 {
            return Err(Error::NotAGroupTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != m {
                return Err(Error::NotAGroupTable(format!("row {i} has length {}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&e| e >= m) {
                return Err(Error::NotAGroupTable(format!("entry {bad} out of range in row {i}")));
            }
        }
        if (0..m).any(|j| table[0][j] != j || table[j][0] != j) {
            return Err(Error::NotAGroupTable("index 0 is not the identity".into()));
        }
        for a in 0..m {
            for b in 0..m {
                let ab = table[a][b];
                for c in 0..m {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroupTable(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        (0..m)
            .map(|i| {
                (0..m)
                    .find(|&j| table[i][j] == 0 && table[j][i] == 0)
                    .ok_or_else(|| Error::NotAGroupTable(format!("element {i} has no inverse")))
            })
            .collect()
    }
}

/// Element `(a, κ)` of a motion group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GElem {
    pub a: Vec<u64>,
    pub k: usize,
}

impl GElem {
    pub fn new(a: Vec<u64>, k: usize) -> Self {
        Self { a, k }
    }
}

/// A character `α ∈ Â`, stored as its coordinate vector in `(Z_n)^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Character(pub Vec<u64>);

impl Character {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }
}

/// One orbit of the dual action of `K` on `Â`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualOrbit {
    pub representative: Character,
    pub members: Vec<Character>,
    pub stabilizer_size: usize,
}

/// The semidirect product `A ⋊ K`.
#[derive(Debug)]
pub struct MotionGroup {
    abelian: AbelianGroup,
    k: KGroup,
    roots: Vec<Complex64>,
    inverse_index: Vec<usize>,
    mul_table: OnceLock<Vec<u32>>,
}

impl MotionGroup {
    /// Validates the table and the action and assembles the group.
    pub fn build(
        modulus: u64,
        rank: usize,
        table: Vec<Vec<usize>>,
        action_matrices: &[Vec<Vec<i64>>],
    ) -> Result<Self> {
        let abelian = AbelianGroup::new(modulus, rank)?;
        let inverses = KGroup::validate_table(&table)?;
        if action_matrices.len() != table.len() {
            return Err(Error::InvalidParameters(format!(
                "{} action matrices for a K of order {}",
                action_matrices.len(),
                table.len()
            )));
        }
        let action = action_matrices
            .iter()
            .map(|rows| {
                let m = ModMatrix::from_rows(rows, modulus)?;
                if m.dim() != rank {
                    return Err(Error::InvalidParameters(format!(
                        "action matrix has size {} but rank is {rank}",
                        m.dim()
                    )));
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        if action[0] != ModMatrix::identity(rank, modulus) {
            return Err(Error::NotAHomomorphism {
                i: 0,
                j: 0,
                ij: 0,
                modulus,
            });
        }
        for (index, m) in action.iter().enumerate() {
            let det = m.det(modulus);
            if det.gcd(&modulus) != 1 {
                return Err(Error::NotInvertible {
                    index,
                    modulus,
                    det,
                });
            }
        }
        for i in 0..table.len() {
            for j in 0..table.len() {
                let ij = table[i][j];
                if action[i].mul(&action[j], modulus) != action[ij] {
                    return Err(Error::NotAHomomorphism { i, j, ij, modulus });
                }
            }
        }
        Ok(Self::assemble(abelian, KGroup { table, inverses, action }))
    }

    fn assemble(abelian: AbelianGroup, k: KGroup) -> Self {
        let n = abelian.modulus();
        let roots = (0..n)
            .map(|e| Complex64::from_polar(1.0, 2.0 * PI * e as f64 / n as f64))
            .collect();
        let mut g = Self {
            abelian,
            k,
            roots,
            inverse_index: Vec::new(),
            mul_table: OnceLock::new(),
        };
        g.inverse_index = (0..g.order())
            .map(|i| g.index_of(&g.inverse(&g.element(i))))
            .collect();
        g
    }

    pub fn abelian(&self) -> &AbelianGroup {
        &self.abelian
    }

    pub fn k(&self) -> &KGroup {
        &self.k
    }

    pub fn modulus(&self) -> u64 {
        self.abelian.modulus()
    }

    pub fn rank(&self) -> usize {
        self.abelian.rank()
    }

    pub fn k_order(&self) -> usize {
        self.k.order()
    }

    /// `|G| = n^d · |K|`.
    pub fn order(&self) -> usize {
        self.abelian.order() * self.k.order()
    }

    pub fn identity(&self) -> GElem {
        GElem::new(vec![0; self.rank()], 0)
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn is_valid(&self, x: &GElem) -> bool {
        self.abelian.is_valid(&x.a) && x.k < self.k.order()
    }

    /// Position of `x` in the canonical enumeration.
    pub fn index_of(&self, x: &GElem) -> usize {
        self.abelian.index_of(&x.a) * self.k.order() + x.k
    }

    pub fn element(&self, index: usize) -> GElem {
        let m = self.k.order();
        GElem::new(self.abelian.vector_at(index / m), index % m)
    }

    pub fn elements(&self) -> impl Iterator<Item = GElem> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    pub fn multiply(&self, x: &GElem, y: &GElem) -> GElem {
        let n = self.modulus();
        let moved = self.k.action(x.k).apply(&y.a, n);
        GElem::new(self.abelian.add(&x.a, &moved), self.k.mul(x.k, y.k))
    }

    /// `(a, κ)⁻¹ = (φ_{κ⁻¹}(−a), κ⁻¹)`.
    pub fn inverse(&self, x: &GElem) -> GElem {
        let kinv = self.k.inv(x.k);
        let a = self
            .k
            .action(kinv)
            .apply(&self.abelian.neg(&x.a), self.modulus());
        GElem::new(a, kinv)
    }

    /// `|G| × |G|` product table over canonical indices, built on first use.
    pub fn mul_table(&self) -> &[u32] {
        self.mul_table.get_or_init(|| {
            let order = self.order();
            let elems: Vec<GElem> = self.elements().collect();
            let mut table = vec![0u32; order * order];
            for (i, x) in elems.iter().enumerate() {
                for (j, y) in elems.iter().enumerate() {
                    table[i * order + j] = self.index_of(&self.multiply(x, y)) as u32;
                }
            }
            table
        })
    }

    pub fn mul_index(&self, i: usize, j: usize) -> usize {
        self.mul_table()[i * self.order() + j] as usize
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.inverse_index[i]
    }

    pub fn characters(&self) -> impl Iterator<Item = Character> + '_ {
        (0..self.abelian.order()).map(|i| Character(self.abelian.vector_at(i)))
    }

    /// `⟨a, α⟩` as a unit complex number.
    pub fn pairing(&self, a: &[u64], alpha: &Character) -> Complex64 {
        self.roots[self.abelian.pairing_exponent(a, &alpha.0) as usize]
    }

    pub fn root_of_unity(&self, exponent: u64) -> Complex64 {
        self.roots[(exponent % self.modulus()) as usize]
    }

    /// `φ_κ(α) = α · M_{κ⁻¹}`.
    pub fn dual_action(&self, k: usize, alpha: &Character) -> Character {
        let kinv = self.k.inv(k);
        Character(self.k.action(kinv).apply_row(&alpha.0, self.modulus()))
    }

    /// Partition of `Â` into `K`-orbits. The orbit of 0 comes first and each
    /// representative is the lexicographically smallest member.
    pub fn dual_orbits(&self) -> Vec<DualOrbit> {
        let size = self.abelian.order();
        let mut seen = vec![false; size];
        let mut orbits = Vec::new();
        for start in 0..size {
            if seen[start] {
                continue;
            }
            let rep = Character(self.abelian.vector_at(start));
            seen[start] = true;
            let mut members = vec![rep.clone()];
            let mut queue = VecDeque::from([rep.clone()]);
            while let Some(beta) = queue.pop_front() {
                for k in 0..self.k.order() {
                    let next = self.dual_action(k, &beta);
                    let idx = self.abelian.index_of(&next.0);
                    if !seen[idx] {
                        seen[idx] = true;
                        members.push(next.clone());
                        queue.push_back(next);
                    }
                }
            }
            members.sort();
            let stabilizer_size = self.k.order() / members.len();
            orbits.push(DualOrbit {
                representative: rep,
                members,
                stabilizer_size,
            });
        }
        orbits
    }

    /// Smallest subgroup containing `seeds`, as a membership mask over
    /// canonical indices.
    pub fn generated_subgroup(&self, seeds: &[usize]) -> Vec<bool> {
        let order = self.order();
        let mut member = vec![false; order];
        let e = self.identity_index();
        member[e] = true;
        let mut gens: Vec<usize> = Vec::new();
        for &s in seeds {
            gens.push(s);
            gens.push(self.inverse_index(s));
        }
        gens.sort_unstable();
        gens.dedup();
        let mut queue = VecDeque::from([e]);
        while let Some(x) = queue.pop_front() {
            for &s in &gens {
                let y = self.mul_index(x, s);
                if !member[y] {
                    member[y] = true;
                    queue.push_back(y);
                }
            }
        }
        member
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[usize]) -> Vec<bool> {
        let order = self.order();
        let mut member = vec![false; order];
        let e = self.identity_index();
        member[e] = true;
        let mut elements = vec![e];
        let mut queue: VecDeque<usize> = VecDeque::new();
        let admit = |y: usize, member: &mut Vec<bool>, elements: &mut Vec<usize>, queue: &mut VecDeque<usize>| {
            if !member[y] {
                member[y] = true;
                elements.push(y);
                queue.push_back(y);
            }
        };
        for &s in seeds {
            admit(s, &mut member, &mut elements, &mut queue);
        }
        while let Some(x) = queue.pop_front() {
            // Conjugates of x by every group element.
            for g in 0..order {
                let c = self.mul_index(self.mul_index(g, x), self.inverse_index(g));
                admit(c, &mut member, &mut elements, &mut queue);
            }
            // Products with everything admitted so far (finite groups: closure
            // under products suffices).
            let snapshot = elements.clone();
            for y in snapshot {
                admit(self.mul_index(x, y), &mut member, &mut elements, &mut queue);
                admit(self.mul_index(y, x), &mut member, &mut elements, &mut queue);
            }
        }
        member
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn dihedral_ten_builds_and_multiplies() {
        let g = catalog::dihedral(5).unwrap();
        assert_eq!(g.order(), 10);
        let x = GElem::new(vec![2], 1);
        let y = GElem::new(vec![3], 0);
        assert_eq!(g.multiply(&x, &y), GElem::new(vec![4], 1));
        assert_eq!(g.inverse(&GElem::new(vec![1], 1)), GElem::new(vec![1], 1));
    }

    #[test]
    fn axioms_hold_exhaustively_on_dihedral() {
        let g = catalog::dihedral(5).unwrap();
        let elems: Vec<GElem> = g.elements().collect();
        let e = g.identity();
        for x in &elems {
            assert_eq!(&g.multiply(&e, x), x);
            assert_eq!(&g.multiply(x, &e), x);
            assert_eq!(g.multiply(x, &g.inverse(x)), e);
            assert_eq!(&g.inverse(&g.inverse(x)), x);
            for y in &elems {
                for z in &elems {
                    assert_eq!(
                        g.multiply(&g.multiply(x, y), z),
                        g.multiply(x, &g.multiply(y, z))
                    );
                }
            }
        }
    }

    #[test]
    fn trivial_k_gives_cyclic_group() {
        let g = MotionGroup::build(2, 1, vec![vec![0]], &[vec![vec![1]]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.dual_orbits().len(), 2);
    }

    #[test]
    fn rejects_non_homomorphism() {
        let err = MotionGroup::build(
            5,
            1,
            vec![vec![0, 1], vec![1, 0]],
            &[vec![vec![1]], vec![vec![2]]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotAHomomorphism { i: 1, j: 1, ij: 0, .. }));
    }

    #[test]
    fn rejects_singular_action() {
        let err = MotionGroup::build(
            6,
            1,
            vec![vec![0, 1], vec![1, 0]],
            &[vec![vec![1]], vec![vec![3]]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotInvertible { index: 1, .. }));
    }

    #[test]
    fn rejects_bad_tables() {
        // identity not at index 0
        let err = MotionGroup::build(3, 1, vec![vec![1, 0], vec![0, 1]], &[vec![vec![1]], vec![vec![1]]])
            .unwrap_err();
        assert!(matches!(err, Error::NotAGroupTable(_)));
        // not associative: a Latin square with identity 0 of order 5 that is not Z_5
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let action = vec![vec![vec![1]]; 5];
        let err = MotionGroup::build(2, 1, table, &action).unwrap_err();
        assert!(matches!(err, Error::NotAGroupTable(_)));
    }

    #[test]
    fn dual_action_examples() {
        let g = catalog::dihedral(5).unwrap();
        assert_eq!(g.dual_action(1, &Character(vec![1])), Character(vec![4]));
        assert_eq!(g.dual_action(1, &Character(vec![0])), Character(vec![0]));
        let orbits = g.dual_orbits();
        let sets: Vec<Vec<Character>> = orbits.iter().map(|o| o.members.clone()).collect();
        assert_eq!(
            sets,
            vec![
                vec![Character(vec![0])],
                vec![Character(vec![1]), Character(vec![4])],
                vec![Character(vec![2]), Character(vec![3])],
            ]
        );
        assert_eq!(orbits[1].stabilizer_size, 1);
    }

    #[test]
    fn pairing_identity_and_action_axiom() {
        for g in [
            catalog::dihedral(5).unwrap(),
            catalog::matrix_group(3, 2, &[vec![vec![0, 2], vec![1, 0]], vec![vec![1, 1], vec![0, 1]]]).unwrap(),
            catalog::cyclic_action(2, 3, 7, &[vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 0]]).unwrap(),
        ] {
            let n = g.modulus();
            let chars: Vec<Character> = g.characters().collect();
            for k in 0..g.k_order() {
                let kinv = g.k().inv(k);
                for alpha in &chars {
                    for x in 0..g.abelian().order() {
                        let a = g.abelian().vector_at(x);
                        let moved = g.k().action(k).apply(&a, n);
                        let lhs = g.abelian().pairing_exponent(&moved, &alpha.0);
                        let rhs = g.abelian().pairing_exponent(&a, &g.dual_action(kinv, alpha).0);
                        assert_eq!(lhs, rhs);
                    }
                    for k2 in 0..g.k_order() {
                        assert_eq!(
                            g.dual_action(g.k().mul(k, k2), alpha),
                            g.dual_action(k, &g.dual_action(k2, alpha))
                        );
                    }
                }
            }
            let orbits = g.dual_orbits();
            assert!(orbits[0].representative.is_zero() && orbits[0].members.len() == 1);
            let total: usize = orbits.iter().map(|o| o.members.len()).sum();
            assert_eq!(total, g.abelian().order());
            for o in &orbits {
                assert_eq!(o.members.len() * o.stabilizer_size, g.k_order());
                assert_eq!(o.members[0], o.representative);
                for m in &o.members {
                    for k in 0..g.k_order() {
                        assert!(o.members.contains(&g.dual_action(k, m)));
                    }
                }
            }
        }
    }

    #[test]
    fn closures() {
        let g = catalog::dihedral(5).unwrap();
        let r = g.index_of(&GElem::new(vec![1], 0));
        let s = g.index_of(&GElem::new(vec![0], 1));
        assert_eq!(g.generated_subgroup(&[r]).iter().filter(|&&b| b).count(), 5);
        assert_eq!(g.generated_subgroup(&[r, s]).iter().filter(|&&b| b).count(), 10);
        // the normal closure of a reflection in D5 is all of D5
        assert_eq!(g.normal_closure(&[s]).iter().filter(|&&b| b).count(), 10);
        assert_eq!(g.normal_closure(&[r]).iter().filter(|&&b| b).count(), 5);
    }
}
