use super::{AnalysisError, GroupInvariants};
use crate::hom::hom_order;
use crate::oracle::PurityVerdict;

/// `|Autcent_Z(G)| = |Hom(G/G'Z(G), Z(G))|`.
pub fn centz_order_formula(inv: &GroupInvariants) -> Result<u128, AnalysisError> {
    if inv.abelian {
        return Err(AnalysisError::Abelian);
    }
    Ok(hom_order(&inv.derived_center_quotient, &inv.center_type)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CentFormula {
    /// `|Hom(G/G', Z(G))|`.
    pub value: u128,
    /// The group is known to be purely non-abelian, so `value = |Autcent(G)|`.
    pub valid: bool,
}

/// `|Hom(G/G', Z(G))|`, which equals `|Autcent(G)|` for purely
/// non-abelian groups.
pub fn cent_order_formula(
    inv: &GroupInvariants,
    purity: &PurityVerdict,
) -> Result<CentFormula, AnalysisError> {
    if inv.abelian {
        return Err(AnalysisError::Abelian);
    }
    Ok(CentFormula {
        value: hom_order(&inv.abelianization, &inv.center_type)?,
        valid: purity.is_purely_non_abelian(),
    })
}

/// `|Z(Inn(G))| = |Z_2(G) / Z(G)|`; 1 for abelian groups.
pub fn z_inn_order(inv: &GroupInvariants) -> usize {
    if inv.abelian {
        1
    } else {
        inv.z_inn()
    }
}
