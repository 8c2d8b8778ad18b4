// Genus three: the P5 relations, the 25 linear relations and their
// multiplets, and the minors of A.

use hyperwp::catalog::genus3;

pub fn run() -> hyperwp::Result<()> {
    let p5 = genus3::genus3_p5()?;
    for (k, r) in p5.ratios.iter().enumerate() {
        println!("P5({k}) = {} * f^{k}(P5(0))", r.as_ref().map_or("?".into(), |c| c.to_string()));
    }
    let span = genus3::linear_span();
    println!("hA entries: rank {}", span.rank());
    for (dim, hw) in genus3::reconstructed_highest_weights()? {
        println!("highest weight of dimension {dim}: {}", if hw.is_zero() { "0".to_string() } else { format!("{} terms", hw.len()) });
    }
    println!("lambda = {:?}", genus3::lambda_search().map(|q| q.to_string()));
    for row in genus3::minor_factorization()? {
        let cells: Vec<String> = row.iter().map(|c| c.as_ref().map_or("?".into(), |c| c.to_string())).collect();
        println!("  {}", cells.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("genus 3 example");
}
