// SPDX-License-Identifier: Apache-2.0

//! Named residual evaluators over grid maps, selectable at run time.

use std::fmt;

use crate::error::{Error, Result};
use crate::surface::{
    bitension_theta_2d, biharmonic_residual, delta_theta_residual, harmonic_residual,
    integrability_residual, maurer_cartan_pullback, GValuedField, GridMap,
};

/// A residual field that vanishes exactly on a class of maps.
pub trait ResidualKind: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn evaluate(&self, map: &GridMap) -> Result<GValuedField>;
}

struct FnResidual {
    name: &'static str,
    description: &'static str,
    eval: fn(&GridMap) -> Result<GValuedField>,
}

impl ResidualKind for FnResidual {
    fn name(&self) -> &'static str {
        self.name
    }

    fn description(&self) -> &'static str {
        self.description
    }

    fn evaluate(&self, map: &GridMap) -> Result<GValuedField> {
        (self.eval)(map)
    }
}

fn pullback_flatness(map: &GridMap) -> Result<GValuedField> {
    integrability_residual(&maurer_cartan_pullback(map)?)
}

/// Ordered collection of residual kinds with unique names.
pub struct ResidualRegistry {
    kinds: Vec<Box<dyn ResidualKind>>,
}

impl fmt::Debug for ResidualRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

impl Default for ResidualRegistry {
    fn default() -> Self {
        Self::with_builtins()
    }
}

impl ResidualRegistry {
    pub fn empty() -> Self {
        Self { kinds: Vec::new() }
    }

    /// `harmonic`, `biharmonic`, `integrability`, `theta` and `bitension`.
    pub fn with_builtins() -> Self {
        let mut r = Self::empty();
        let builtins = [
            FnResidual {
                name: "harmonic",
                description: "divergence of the pullback, zero iff harmonic",
                eval: harmonic_residual,
            },
            FnResidual {
                name: "biharmonic",
                description: "left-hand side of the biharmonic map equation",
                eval: biharmonic_residual,
            },
            FnResidual {
                name: "integrability",
                description: "flatness of the pulled-back Maurer-Cartan form",
                eval: pullback_flatness,
            },
            FnResidual {
                name: "theta",
                description: "codifferential of Theta",
                eval: delta_theta_residual,
            },
            FnResidual {
                name: "bitension",
                description: "bitension field in algebra coordinates",
                eval: bitension_theta_2d,
            },
        ];
        for kind in builtins {
            r.register(Box::new(kind)).expect("builtin names are unique");
        }
        r
    }

    pub fn register(&mut self, kind: Box<dyn ResidualKind>) -> Result<()> {
        if self.get(kind.name()).is_some() {
            return Err(Error::InvalidParameter(format!(
                "residual '{}' is already registered",
                kind.name()
            )));
        }
        self.kinds.push(kind);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&dyn ResidualKind> {
        self.kinds.iter().find(|k| k.name() == name).map(|k| k.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.kinds.iter().map(|k| k.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn ResidualKind> {
        self.kinds.iter().map(|k| k.as_ref())
    }

    /// Resolves a selector: a registered name, or `all`.
    pub fn select(&self, selector: &str) -> Result<Vec<&dyn ResidualKind>> {
        if selector == "all" {
            return Ok(self.iter().collect());
        }
        self.get(selector).map(|k| vec![k]).ok_or_else(|| {
            Error::InvalidParameter(format!(
                "unknown residual '{selector}', expected one of {} or all",
                self.names().join(", ")
            ))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{su2, AlgebraElement};
    use crate::surface::Grid;
    use std::sync::Arc;

    #[test]
    fn builtins_resolve() {
        let r = ResidualRegistry::with_builtins();
        assert_eq!(r.names(), ["harmonic", "biharmonic", "integrability", "theta", "bitension"]);
        assert_eq!(r.select("all").unwrap().len(), 5);
        assert_eq!(r.select("theta").unwrap()[0].name(), "theta");
        assert!(r.select("tension").is_err());
    }

    #[test]
    fn duplicate_names_rejected() {
        let mut r = ResidualRegistry::with_builtins();
        let dup = FnResidual {
            name: "harmonic",
            description: "",
            eval: harmonic_residual,
        };
        assert!(r.register(Box::new(dup)).is_err());
    }

    #[test]
    fn constant_map_is_zero_for_every_kind() {
        let b = Arc::new(su2());
        let g = AlgebraElement::new(b.clone(), vec![0.1, 0.2, 0.3]).unwrap().exp(1.0).unwrap();
        let grid = Grid::new(9, 9, 0.1, 0.1, 0.0, 0.0).unwrap();
        let map = GridMap::from_fn(b, grid, |_, _| 1.0, |_, _| Ok(g.clone())).unwrap();
        for kind in ResidualRegistry::with_builtins().iter() {
            assert_eq!(kind.evaluate(&map).unwrap().sup_norm(), 0.0, "{}", kind.name());
        }
    }
}
