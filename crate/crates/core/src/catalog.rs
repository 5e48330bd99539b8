//! Ready-made motion groups and measure families.

use std::collections::HashMap;
use std::sync::Arc;

use rand::seq::index;
use rand::Rng;

use crate::error::{Error, Result};
use crate::group::{GElem, ModMatrix, MotionGroup};
use crate::measure::GroupMeasure;

/// Multiplication table of `Z_m`.
pub fn cyclic_table(m: usize) -> Vec<Vec<usize>> {
    (0..m).map(|i| (0..m).map(|j| (i + j) % m).collect()).collect()
}

/// `(Z_n)^d ⋊ Z_m` where the generator of `Z_m` acts by `matrix`.
/// Fails with `NotAHomomorphism` unless `matrix^m = I` mod `n`.
pub fn cyclic_action(n: u64, d: usize, m: usize, matrix: &[Vec<i64>]) -> Result<MotionGroup> {
    let gen = ModMatrix::from_rows(matrix, n)?;
    let mut power = ModMatrix::identity(d, n);
    let mut action = Vec::with_capacity(m);
    for _ in 0..m {
        action.push(to_signed(&power));
        power = power.mul(&gen, n);
    }
    MotionGroup::build(n, d, cyclic_table(m), &action)
}

/// `Z_n ⋊ Z_2` with the nontrivial element acting by negation.
pub fn dihedral(n: u64) -> Result<MotionGroup> {
    cyclic_action(n, 1, 2, &[vec![-1]])
}

/// `Z_n × Z_m` (trivial action).
pub fn direct_cyclic(n: u64, m: usize) -> Result<MotionGroup> {
    cyclic_action(n, 1, m, &[vec![1]])
}

/// `Z_n ⋊ Z_m` with the generator acting by multiplication by `unit`.
pub fn multiplicative(n: u64, m: usize, unit: i64) -> Result<MotionGroup> {
    cyclic_action(n, 1, m, &[vec![unit]])
}

/// `(Z_n)^d ⋊ K` where `K` is the subgroup of `GL_d(Z_n)` generated by `gens`
/// acting tautologically.
pub fn matrix_group(n: u64, d: usize, gens: &[Vec<Vec<i64>>]) -> Result<MotionGroup> {
    let gens = gens
        .iter()
        .map(|g| ModMatrix::from_rows(g, n))
        .collect::<Result<Vec<_>>>()?;
    let mut elems = vec![ModMatrix::identity(d, n)];
    let mut lookup: HashMap<ModMatrix, usize> = HashMap::from([(elems[0].clone(), 0)]);
    let mut cursor = 0;
    while cursor < elems.len() {
        for g in &gens {
            let next = elems[cursor].mul(g, n);
            if !lookup.contains_key(&next) {
                lookup.insert(next.clone(), elems.len());
                elems.push(next);
                if elems.len() > 4096 {
                    return Err(Error::InvalidParameters(
                        "generated matrix group is too large".into(),
                    ));
                }
            }
        }
        cursor += 1;
    }
    let table = elems
        .iter()
        .map(|x| {
            elems
                .iter()
                .map(|y| {
                    lookup.get(&x.mul(y, n)).copied().ok_or_else(|| {
                        Error::NotAGroupTable("generators do not generate a finite group".into())
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let action: Vec<_> = elems.iter().map(to_signed).collect();
    MotionGroup::build(n, d, table, &action)
}

fn to_signed(m: &ModMatrix) -> Vec<Vec<i64>> {
    m.rows()
        .into_iter()
        .map(|r| r.into_iter().map(|c| c as i64).collect())
        .collect()
}

/// A named family of motion groups covering abelian, dihedral, metacyclic,
/// rank-2 and rank-3 constructions with `|G| ≤ 200`.
pub fn standard_groups() -> Vec<(String, Arc<MotionGroup>)> {
    let specs: Vec<(&str, Result<MotionGroup>)> = vec![
        ("Z2", direct_cyclic(2, 1)),
        ("Z7", direct_cyclic(7, 1)),
        ("Z6xZ2", direct_cyclic(6, 2)),
        ("Z5xZ3", direct_cyclic(5, 3)),
        ("D5", dihedral(5)),
        ("D6", dihedral(6)),
        ("D12", dihedral(12)),
        ("D50", dihedral(50)),
        ("Z7:Z3", multiplicative(7, 3, 2)),
        ("Z5:Z4", multiplicative(5, 4, 2)),
        ("Z13:Z3", multiplicative(13, 3, 3)),
        ("Z9:Z6", multiplicative(9, 6, 2)),
        ("Z5:Z4(neg)", multiplicative(5, 4, -1)),
        ("Z3:Z1", multiplicative(3, 1, 1)),
        ("A4", cyclic_action(2, 2, 3, &[vec![0, 1], vec![1, 1]])),
        (
            "S4",
            matrix_group(2, 2, &[vec![vec![0, 1], vec![1, 0]], vec![vec![1, 1], vec![0, 1]]]),
        ),
        ("Z3^2:Z4", cyclic_action(3, 2, 4, &[vec![0, -1], vec![1, 0]])),
        ("Z3^2:Z2", cyclic_action(3, 2, 2, &[vec![-1, 0], vec![0, -1]])),
        ("Z2^3:Z7", cyclic_action(2, 3, 7, &[vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 0]])),
        ("Z5^2:Z4", cyclic_action(5, 2, 4, &[vec![0, -1], vec![1, 0]])),
        ("Z4^2:Z2", cyclic_action(4, 2, 2, &[vec![0, 1], vec![1, 0]])),
    ];
    specs
        .into_iter()
        .map(|(name, g)| {
            let g = g.unwrap_or_else(|e| panic!("catalog group {name} failed to build: {e}"));
            (name.to_string(), Arc::new(g))
        })
        .collect()
}

/// Structural family of a generated test measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureKind {
    Uniform,
    PointMass,
    RandomSupport,
    Lazy,
    SubgroupA,
    Coset,
    CyclicSubgroup,
    /// Random support covering about half of the group.
    DenseRandom,
}

impl MeasureKind {
    pub const ALL: [MeasureKind; 8] = [
        MeasureKind::Uniform,
        MeasureKind::PointMass,
        MeasureKind::RandomSupport,
        MeasureKind::Lazy,
        MeasureKind::SubgroupA,
        MeasureKind::Coset,
        MeasureKind::CyclicSubgroup,
        MeasureKind::DenseRandom,
    ];
}

/// Probability measure with weights drawn uniformly from `[floor, 1]` on
/// `support`, then normalized.
pub fn weighted(g: &Arc<MotionGroup>, support: &[usize], floor: f64, rng: &mut impl Rng) -> GroupMeasure {
    let mut w = vec![0.0; g.order()];
    for &s in support {
        w[s] += floor + (1.0 - floor) * rng.random::<f64>();
    }
    let total: f64 = w.iter().sum();
    GroupMeasure::from_real(g.clone(), w.into_iter().map(|x| x / total).collect())
        .expect("weights have the group's length")
}

/// Draws one test measure of the requested kind.
pub fn sample_measure(g: &Arc<MotionGroup>, kind: MeasureKind, rng: &mut impl Rng) -> GroupMeasure {
    let order = g.order();
    let kk = g.k_order();
    let a_order = g.abelian().order();
    match kind {
        MeasureKind::Uniform => GroupMeasure::uniform(g.clone()),
        MeasureKind::PointMass => GroupMeasure::point(g.clone(), rng.random_range(0..order)),
        MeasureKind::RandomSupport => {
            let size = rng.random_range(2..=4.min(order));
            let support = index::sample(rng, order, size).into_vec();
            weighted(g, &support, 0.1, rng)
        }
        MeasureKind::Lazy => {
            let size = rng.random_range(1..=3.min(order));
            let mut support = index::sample(rng, order, size).into_vec();
            support.push(g.identity_index());
            weighted(g, &support, 0.2, rng)
        }
        MeasureKind::SubgroupA => {
            let size = rng.random_range(1..=3.min(a_order));
            let support: Vec<usize> = index::sample(rng, a_order, size)
                .into_iter()
                .map(|ai| ai * kk)
                .collect();
            weighted(g, &support, 0.1, rng)
        }
        MeasureKind::Coset => {
            // All atoms share one nontrivial K-component, or (K trivial) sit in
            // a translate of a proper subgroup of A.
            if kk > 1 {
                let k = rng.random_range(1..kk);
                let size = rng.random_range(1..=3.min(a_order));
                let support: Vec<usize> = index::sample(rng, a_order, size)
                    .into_iter()
                    .map(|ai| ai * kk + k)
                    .collect();
                weighted(g, &support, 0.1, rng)
            } else {
                let shift = rng.random_range(1..order);
                let sub = g.generated_subgroup(&[(shift * 2) % order]);
                let members: Vec<usize> = (0..order).filter(|&i| sub[i]).collect();
                let size = rng.random_range(1..=members.len().min(3));
                let picks = index::sample(rng, members.len(), size);
                let support: Vec<usize> = picks
                    .into_iter()
                    .map(|p| g.mul_index(shift, members[p]))
                    .collect();
                weighted(g, &support, 0.1, rng)
            }
        }
        MeasureKind::CyclicSubgroup => {
            let x = rng.random_range(0..order);
            let sub = g.generated_subgroup(&[x]);
            let members: Vec<usize> = (0..order).filter(|&i| sub[i]).collect();
            let size = rng.random_range(1..=members.len().min(3));
            let picks = index::sample(rng, members.len(), size);
            let support: Vec<usize> = picks.into_iter().map(|p| members[p]).collect();
            weighted(g, &support, 0.1, rng)
        }
        MeasureKind::DenseRandom => {
            let size = (order / 2).max(2.min(order));
            let support = index::sample(rng, order, size).into_vec();
            weighted(g, &support, 0.5, rng)
        }
    }
}

/// Point mass at an element of order 2 in `Z_2`: ergodic but not mixing.
pub fn order_two_witness() -> (Arc<MotionGroup>, GroupMeasure) {
    let g = Arc::new(direct_cyclic(2, 1).expect("Z2 builds"));
    let x = g.index_of(&GElem::new(vec![1], 0));
    let mu = GroupMeasure::point(g.clone(), x);
    (g, mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        for (name, g) in standard_groups() {
            assert!(g.order() <= 200, "{name} too large");
        }
        assert_eq!(matrix_group(2, 2, &[vec![vec![0, 1], vec![1, 0]], vec![vec![1, 1], vec![0, 1]]]).unwrap().order(), 24);
        assert_eq!(multiplicative(7, 3, 2).unwrap().order(), 21);
    }

    #[test]
    fn non_faithful_action_is_accepted() {
        let g = multiplicative(5, 4, -1).unwrap();
        assert_eq!(g.order(), 20);
        assert_eq!(g.k().action(2), &ModMatrix::identity(1, 5));
    }

    #[test]
    fn cyclic_action_rejects_wrong_order() {
        assert!(matches!(
            multiplicative(5, 2, 2),
            Err(Error::NotAHomomorphism { .. })
        ));
    }
}
