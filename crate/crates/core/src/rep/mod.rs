//! Comodules, modules, relative Hopf modules and their morphisms.

mod comodule;
mod module;
mod relhopf;
mod simple;

pub use comodule::{cotensor, cotensor_map, recover_coalgebra_map, Bicomodule, Comodule};
pub use module::{hom_between_families, spin, tensor_over, Module};
pub use relhopf::RelHopfModule;
pub use simple::{
    grouplikes, is_cosemisimple, is_semisimple_module, jacobson_radical, radical_and_simples,
    simple_comodules, simple_modules, socle, RadicalData,
};

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}
