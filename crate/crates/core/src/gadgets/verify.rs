use crate::error::Result;
use crate::instance::SteinerInstance;
use crate::rational::Rational;
use crate::solvers::solve_exact;

use super::GadgetCertificate;

/// Both optima and how they compare with the certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateVerdict {
    pub original_opt: Rational,
    pub reduced_opt: Rational,
    /// `a * opt + b`, absent when the certificate claims no relation.
    pub predicted: Option<Rational>,
    /// `opt' - predicted`.
    pub residual: Option<Rational>,
}

impl CertificateVerdict {
    pub fn holds(&self) -> bool {
        self.residual == Some(Rational::ZERO)
    }
}

/// Solves both instances exactly and checks the certificate's relation.
pub fn verify_certificate(
    original: &SteinerInstance,
    reduced: &SteinerInstance,
    cert: &GadgetCertificate,
) -> Result<CertificateVerdict> {
    let original_opt = solve_exact(original)?.solution.weight;
    let reduced_opt = solve_exact(reduced)?.solution.weight;
    let predicted = cert.relation.predict(original_opt);
    Ok(CertificateVerdict {
        original_opt,
        reduced_opt,
        predicted,
        residual: predicted.map(|p| reduced_opt - p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{reduce_line_graph, reduce_subdivision, Relation};
    use crate::graph::Graph;

    #[test]
    fn line_gadget_on_k2() {
        let inst = SteinerInstance::unit_edge(Graph::path(2), [0, 1]).unwrap();
        let red = reduce_line_graph(&inst).unwrap();
        let v = verify_certificate(&inst, &red.instance, &red.certificate).unwrap();
        assert_eq!(v.reduced_opt, Rational::from_integer(3));
        assert!(v.holds());
    }

    #[test]
    fn corrupted_relation_is_caught() {
        let inst = SteinerInstance::unit_edge(Graph::cycle(5), [0, 2]).unwrap();
        let mut red = reduce_subdivision(&inst, 1).unwrap();
        assert!(verify_certificate(&inst, &red.instance, &red.certificate).unwrap().holds());
        red.certificate.relation = Relation::Affine {
            a: Rational::ONE,
            b: Rational::new(1, 7),
        };
        let v = verify_certificate(&inst, &red.instance, &red.certificate).unwrap();
        assert_eq!(v.residual, Some(Rational::new(-1, 7)));
        assert!(!v.holds());
    }
}
