//! Order-driven dispatch: the AF recursion over the doubling constructions,
//! and the direct Bose/Skolem route.

use std::collections::HashMap;

use super::{ocycle_bose, ocycle_double_plus_one, ocycle_double_plus_seven_with, ocycle_skolem, OcycleCertificate};
use crate::constructions::{BaseCases, Fano7Seed};
use crate::design::is_admissible;
use crate::error::{Error, Result};

/// Orders served straight from the tabulated AF base cases.
pub const AF_BASE_ORDERS: [u32; 6] = [15, 19, 21, 25, 27, 33];

/// Builds AF certificates recursively, memoizing by order.
pub struct AfBuilder {
    bases: BaseCases,
    seed: Option<Fano7Seed>,
    memo: HashMap<u32, OcycleCertificate>,
}

impl AfBuilder {
    pub fn new(bases: BaseCases) -> Self {
        AfBuilder {
            bases,
            seed: None,
            memo: HashMap::new(),
        }
    }

    fn seed(&mut self) -> Result<Fano7Seed> {
        if self.seed.is_none() {
            let asset = self.bases.get(7)?;
            let cycle = asset.cycle()?;
            self.seed = Some(Fano7Seed::new(asset.parsed_sts, cycle, [-3, -2, -1, 0, 1, 2, 3])?);
        }
        Ok(self.seed.clone().expect("seed set"))
    }

    pub fn build(&mut self, n: u32) -> Result<OcycleCertificate> {
        if !is_admissible(n) {
            return Err(Error::InadmissibleOrder { order: n });
        }
        if n < 15 {
            return Err(Error::InvalidParameter(format!("the AF route starts at 15, got {n}")));
        }
        if let Some(c) = self.memo.get(&n) {
            return Ok(c.clone());
        }
        let cert = if AF_BASE_ORDERS.contains(&n) {
            OcycleCertificate::from_base_case(&self.bases.get(n)?)?
        } else {
            match n % 12 {
                3 | 7 => {
                    let base = self.build((n - 1) / 2)?;
                    ocycle_double_plus_one(&base)?
                }
                1 | 9 => {
                    let base = self.build((n - 7) / 2)?;
                    let seed = self.seed()?;
                    ocycle_double_plus_seven_with(&base, &seed)?
                }
                _ => unreachable!("admissible orders are 1, 3, 7 or 9 mod 12"),
            }
        };
        self.memo.insert(n, cert.clone());
        Ok(cert)
    }
}

/// An AF STS(n) with an ocycle, `n >= 15`, from the embedded base cases.
pub fn ocycle_af(n: u32) -> Result<OcycleCertificate> {
    AfBuilder::new(BaseCases::embedded()).build(n)
}

/// Some STS(n) with an ocycle, `n >= 7`: Bose for 3 mod 6, Skolem for 1.
pub fn ocycle_any(n: u32) -> Result<OcycleCertificate> {
    if !is_admissible(n) {
        return Err(Error::InadmissibleOrder { order: n });
    }
    if n < 7 {
        return Err(Error::InvalidParameter(format!("no ocycle route below 7, got {n}")));
    }
    if n % 6 == 3 {
        ocycle_bose(n / 3)
    } else {
        ocycle_skolem((n - 1) / 6)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_cases() {
        let c = ocycle_af(31).unwrap();
        assert_eq!(c.provenance.tree(), "31 = 2*15+1 [15 = base]");
        let c = ocycle_af(75).unwrap();
        assert_eq!(c.provenance.tree(), "75 = 2*37+1 [37 = 2*15+7 [15 = base]]");
    }

    #[test]
    fn rejects() {
        assert!(matches!(ocycle_af(11), Err(Error::InadmissibleOrder { order: 11 })));
        assert!(ocycle_af(13).is_err());
        assert!(ocycle_any(3).is_err());
        assert_eq!(ocycle_any(7).unwrap().provenance.construction, "skolem");
        assert_eq!(ocycle_any(9).unwrap().provenance.construction, "bose");
    }
}
