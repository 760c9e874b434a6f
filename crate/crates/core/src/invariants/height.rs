//! Height of a monomial ideal: the minimum vertex cover of the hypergraph
//! whose edges are the supports of the generators.

use crate::ideal::MonomialIdeal;

pub fn height_monomial(a: &MonomialIdeal) -> usize {
    let n = a.dim();
    assert!(n <= 63, "height search is exponential in the dimension");
    let edges: Vec<u64> = a
        .generators()
        .iter()
        .map(|u| {
            u.entries()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u64, |mask, (j, _)| mask | 1 << j)
        })
        .collect();
    let covers = |s: u64| edges.iter().all(|&e| e & s != 0);
    (1..=n)
        .find(|&size| subsets_of_size(n, size).any(covers))
        .expect("the full variable set covers every generator")
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    (0u64..1 << n).filter(move |s| s.count_ones() as usize == k)
}
