use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;

use super::spec::FunctionId;
use crate::error::{Error, Result};
use crate::qseries::TruncatedSeries;

/// Serves coefficients of the supported counting functions up to a fixed
/// truncation order, computing each generating function at most once.
#[derive(Debug)]
pub struct Evaluator {
    order: usize,
    cache: Mutex<HashMap<FunctionId, Arc<TruncatedSeries>>>,
}

impl Evaluator {
    pub fn new(order: usize) -> Self {
        Self {
            order,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn ensure_within(&self, argument: u64) -> Result<()> {
        if argument > self.order as u64 {
            return Err(Error::TruncationTooSmall {
                needed: argument,
                order: self.order,
            });
        }
        Ok(())
    }

    pub fn series(&self, function: FunctionId) -> Result<Arc<TruncatedSeries>> {
        let mut cache = self.cache.lock().expect("evaluator cache poisoned");
        if let Some(s) = cache.get(&function) {
            return Ok(Arc::clone(s));
        }
        let s = Arc::new(function.series(self.order)?);
        cache.insert(function, Arc::clone(&s));
        Ok(s)
    }

    pub fn value(&self, function: FunctionId, argument: u64) -> Result<BigInt> {
        self.ensure_within(argument)?;
        Ok(self.series(function)?.coeff(argument as usize).clone())
    }
}
