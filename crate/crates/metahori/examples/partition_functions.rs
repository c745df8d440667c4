//! Partition functions of the lattice models, in all three variants.

use metahori::lattice::{enumerate_states, partition_function, SystemSpec, Variant};
use metahori::Permutation;

fn main() -> metahori::Result<()> {
    let w = Permutation::parse(3, "s1")?;
    let spec = SystemSpec::new(2, vec![2, 3, 0], vec![1, 0, 0], w)?;
    println!("{spec}");
    for v in Variant::ALL {
        println!("  {:>12}: Z = {}", v.name(), partition_function(&spec.clone().with_variant(v)));
    }

    let spec = SystemSpec::new(2, vec![1, 0], vec![0, 1], Permutation::parse(2, "s1")?)?;
    let states = enumerate_states(&spec);
    println!("{spec}: {} state(s)", states.len());
    if let Some(s) = states.first() {
        println!("{}", s.dump());
    }

    let w = Permutation::parse(3, "s1 s2")?;
    let spec = SystemSpec::new(3, vec![4, 2, 0], vec![1, 0, 2], w)?;
    println!("{spec}: Z = {}", partition_function(&spec));
    Ok(())
}
