use crate::error::{Error, Result};
use crate::fitness::Fitness;
use crate::vcsp::{SoftConstraint, VcspInstance};

/// `N` Boolean variables in disjoint consecutive pairs, each scored 1 when
/// both bits are 0, `alpha` when both are 1 and 0 otherwise.
pub fn make_pairs_instance(n: usize, alpha: i64) -> Result<VcspInstance> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::invalid(format!("pairs landscape needs an even N >= 2, got {n}")));
    }
    if alpha <= 1 {
        return Err(Error::invalid(format!("pairs landscape needs alpha > 1, got {alpha}")));
    }
    let constraints = (0..n / 2)
        .map(|p| SoftConstraint::new(vec![2 * p, 2 * p + 1], Fitness::from(1), vec![1, 0, 0, alpha]))
        .collect();
    let inst = VcspInstance::new(vec![2; n], constraints)?;
    Ok(inst
        .with_metadata("kind", "pairs")
        .with_metadata("n", n)
        .with_metadata("alpha", alpha))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_values() {
        let inst = make_pairs_instance(2, 5).unwrap();
        assert_eq!(inst.evaluate(&[1, 1]).unwrap(), Fitness::from(5));
        assert_eq!(inst.evaluate(&[0, 1]).unwrap(), Fitness::zero());
        assert_eq!(inst.delta_evaluate(&[0, 0], 0, 1).unwrap(), Fitness::from(-1));
        let four = make_pairs_instance(4, 2).unwrap();
        assert_eq!(four.evaluate(&[1; 4]).unwrap(), Fitness::from(4));
    }

    #[test]
    fn forest_of_disjoint_edges() {
        let g = make_pairs_instance(6, 3).unwrap().constraint_graph();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3), (4, 5)]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(make_pairs_instance(3, 2).is_err());
        assert!(make_pairs_instance(0, 2).is_err());
        assert!(make_pairs_instance(4, 1).is_err());
    }
}
