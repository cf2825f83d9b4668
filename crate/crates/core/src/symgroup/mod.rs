//! Partitions, cycle types and irreducible characters of Sym(m).

mod character;
mod partition;

pub use character::{dimension, is_faithful, mn_character, CharacterEngine};
pub use partition::{
    enumerate_partitions, enumerate_partitions_capped, factorial, power_cycle_type, CycleType,
    Partition, MAX_PARTITION_M,
};
