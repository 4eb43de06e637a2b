use super::rep::Representation;
use super::resolve::{cosyzygy_dims_oracle, ext_dims_oracle, syzygy_dims_oracle};
use crate::algebra::GentleAlgebra;
use crate::error::OracleError;
use crate::ext::ext_dim;
use crate::homology::{cosyzygy, syzygy};
use crate::modules::StringModule;

/// Side-by-side comparison of the combinatorial and linear-algebra answers
/// for one pair of string modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    /// `dim Ext^n` for `n = 1..=horizon`.
    pub combinatorial: Vec<usize>,
    pub oracle: Vec<usize>,
    pub syzygy_dims: (Vec<usize>, Vec<usize>),
    pub cosyzygy_dims: (Vec<usize>, Vec<usize>),
}

impl PairCheck {
    pub fn first_mismatch(&self) -> Option<String> {
        if let Some(i) =
            (0..self.combinatorial.len()).find(|&i| self.combinatorial[i] != self.oracle[i])
        {
            return Some(format!(
                "Ext^{}: combinatorial {} vs oracle {}",
                i + 1,
                self.combinatorial[i],
                self.oracle[i]
            ));
        }
        if self.syzygy_dims.0 != self.syzygy_dims.1 {
            return Some(format!(
                "syzygy dimension vector {:?} vs oracle {:?}",
                self.syzygy_dims.0, self.syzygy_dims.1
            ));
        }
        if self.cosyzygy_dims.0 != self.cosyzygy_dims.1 {
            return Some(format!(
                "cosyzygy dimension vector {:?} vs oracle {:?}",
                self.cosyzygy_dims.0, self.cosyzygy_dims.1
            ));
        }
        None
    }

    pub fn agrees(&self) -> bool {
        self.first_mismatch().is_none()
    }
}

pub fn check_pair(
    a: &GentleAlgebra,
    m: &StringModule,
    n: &StringModule,
    horizon: usize,
) -> Result<PairCheck, OracleError> {
    let (rm, rn) = (
        Representation::from_module(a, m),
        Representation::from_module(a, n),
    );
    let combinatorial = (1..=horizon).map(|d| ext_dim(a, m, n, d)).collect();
    let oracle = ext_dims_oracle(a, &rm, &rn, horizon)?[1..].to_vec();
    Ok(PairCheck {
        combinatorial,
        oracle,
        syzygy_dims: (syzygy(a, m).dims(a), syzygy_dims_oracle(a, &rm)?),
        cosyzygy_dims: (cosyzygy(a, m).dims(a), cosyzygy_dims_oracle(a, &rm)?),
    })
}
