pub mod algebra;
pub mod buildingset;
pub mod invariants;
pub mod ringcalc;
pub mod series;
