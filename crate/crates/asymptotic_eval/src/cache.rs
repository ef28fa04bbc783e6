use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use saddle_coefficients::{generate_family, CoefficientFamily, MAX_INDEX};

use crate::EvalError;

type Key = (CoefficientFamily, Option<u64>);

static MEMO: OnceLock<RwLock<HashMap<Key, Arc<Vec<f64>>>>> = OnceLock::new();

/// Real parts of a family up to subscript [`MAX_INDEX`], memoized per parameter.
///
/// `B` is returned interleaved as `[re_0, im_0, re_1, im_1, …]`.
/// Concurrent misses may generate the same table twice; both writes store
/// identical data.
pub fn coefficients(
    family: CoefficientFamily,
    parameter: Option<f64>,
) -> Result<Arc<Vec<f64>>, EvalError> {
    let key = (family, parameter.map(f64::to_bits));
    let memo = MEMO.get_or_init(Default::default);
    if let Some(v) = memo.read().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return Ok(v.clone());
    }
    let table = generate_family(family, parameter, MAX_INDEX)?;
    let values = if family == CoefficientFamily::B {
        table
            .complex_f64()
            .into_iter()
            .flat_map(|(re, im)| [re, im])
            .collect()
    } else {
        table.real_f64()
    };
    let values = Arc::new(values);
    memo.write()
        .unwrap_or_else(|e| e.into_inner())
        .insert(key, values.clone());
    Ok(values)
}
