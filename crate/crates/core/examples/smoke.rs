use kappa_core::pairing::kappa_rank;
fn main() {
    let t0 = std::time::Instant::now();
    let g1: Vec<usize> = (2..=9u32).map(|n| kappa_rank(n-1, 1, n)).collect();
    println!("g=1 n=2..9: {:?} (expect [1..=8])", g1);
    let g2: Vec<usize> = (2..=6u32).map(|n| kappa_rank(2+n, 2, n)).collect();
    println!("g=2 n=2..6: {:?} (expect [4,5,7,8,10])", g2);
    let g3: Vec<usize> = (2..=4u32).map(|n| kappa_rank(5+n, 3, n)).collect();
    println!("g=3 n=2..4: {:?} (expect [5,7,9])", g3);
    println!("elapsed {:?}", t0.elapsed());
}
