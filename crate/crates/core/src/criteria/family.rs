//! The one-parameter family `<6, 9, 12 + c, 15 + c>`.

use crate::semigroup::NumericalSemigroup;

use super::CriteriaError;

pub fn family_6_9(c: u32) -> Result<NumericalSemigroup, CriteriaError> {
    if c == 0 || c % 3 == 0 {
        return Err(CriteriaError::InvalidParameter(format!(
            "c must be positive and prime to 3, got {c}"
        )));
    }
    Ok(NumericalSemigroup::from_generators(&[
        6,
        9,
        12 + c,
        15 + c,
    ])?)
}
