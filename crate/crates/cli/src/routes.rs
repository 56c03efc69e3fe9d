//! Route selection for `generate`.

use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::ValueEnum;
use ocycle_core::builders::{
    ocycle_any, ocycle_bose, ocycle_double_plus_one, ocycle_double_plus_seven_with, ocycle_product, ocycle_skolem,
    AfBuilder, OcycleCertificate,
};
use ocycle_core::constructions::{BaseCases, Fano7Seed};
use ocycle_core::{is_admissible, Error};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// Automorphism free, from the base cases by doubling (n >= 15).
    Af,
    /// Bose for n = 3 mod 6, Skolem for n = 1 mod 6.
    Any,
    Bose,
    Skolem,
    /// Direct product of two smaller systems from the `any` route.
    Product,
    /// n = 2v+1 from an STS(v).
    D2v1,
    /// n = 2v+7 from an STS(v), v >= 15.
    D2v7,
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = self.to_possible_value().expect("no skipped variants");
        f.write_str(name.get_name())
    }
}

pub struct Builder {
    af: AfBuilder,
    bases: BaseCases,
    data_dir: Option<PathBuf>,
}

impl Builder {
    pub fn from_env() -> anyhow::Result<Self> {
        let data_dir = std::env::var_os("OCYCLE_DATA_DIR").map(PathBuf::from);
        let bases = BaseCases::from_env().context("loading base cases")?;
        Ok(Builder {
            af: AfBuilder::new(bases.clone()),
            bases,
            data_dir,
        })
    }

    pub fn data_dir(&self) -> Option<&std::path::Path> {
        self.data_dir.as_deref()
    }

    pub fn build(&mut self, route: Route, n: u32) -> anyhow::Result<OcycleCertificate> {
        if !is_admissible(n) {
            return Err(Error::InadmissibleOrder { order: n }.into());
        }
        let cert = match route {
            Route::Af => self.af.build(n)?,
            Route::Any => ocycle_any(n)?,
            Route::Bose => {
                if n % 6 != 3 {
                    bail!("route bose needs n = 3 mod 6, got {n}");
                }
                ocycle_bose(n / 3)?
            }
            Route::Skolem => {
                if n % 6 != 1 {
                    bail!("route skolem needs n = 1 mod 6, got {n}");
                }
                ocycle_skolem((n - 1) / 6)?
            }
            Route::Product => {
                let Some(u) = (7..n).find(|&u| n % u == 0 && is_admissible(u) && is_admissible(n / u) && n / u >= 7)
                else {
                    bail!("route product needs n = u*w with admissible u, w >= 7, got {n}");
                };
                let (cert, _) = ocycle_product(&ocycle_any(u)?, &ocycle_any(n / u)?)?;
                cert
            }
            Route::D2v1 => {
                let v = (n - 1) / 2;
                if n % 2 == 0 || !is_admissible(v) || v < 7 {
                    bail!("route d2v1 needs n = 2v+1 with admissible v >= 7, got {n}");
                }
                ocycle_double_plus_one(&self.child(v)?)?
            }
            Route::D2v7 => {
                if n < 37 || !is_admissible((n - 7) / 2) {
                    bail!("route d2v7 needs n = 2v+7 with admissible v >= 15, got {n}");
                }
                let child = self.af.build((n - 7) / 2)?;
                ocycle_double_plus_seven_with(&child, &self.seed()?)?
            }
        };
        Ok(cert)
    }

    /// AF where the AF route reaches, otherwise any system.
    fn child(&mut self, v: u32) -> anyhow::Result<OcycleCertificate> {
        Ok(if v >= 15 { self.af.build(v)? } else { ocycle_any(v)? })
    }

    fn seed(&self) -> anyhow::Result<Fano7Seed> {
        let asset = self.bases.get(7)?;
        let cycle = asset.cycle()?;
        Ok(Fano7Seed::new(asset.parsed_sts, cycle, [-3, -2, -1, 0, 1, 2, 3])?)
    }
}
