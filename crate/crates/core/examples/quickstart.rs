use gentle::ext::{ext_dim, ext_sequence};
use gentle::format::parse_algebra;
use gentle::homology::proj_dim;
use gentle::oracle::check_pair;
use gentle::StringModule;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = parse_algebra(include_str!("../fixtures/C4.alg"))?;
    let m = StringModule::parse(&a, "e")?;
    let n = StringModule::parse(&a, "f")?;

    println!("Ext^2 = {}", ext_dim(&a, &m, &n, 2));
    let seq = ext_sequence(&a, &m, &n);
    println!(
        "{:?} from degree {}",
        seq.classification(),
        seq.tail_start()
    );
    println!("pd M(e) = {:?}", proj_dim(&a, &m));

    // the same numbers from exact linear algebra
    assert!(check_pair(&a, &m, &n, 6)?.agrees());
    Ok(())
}
