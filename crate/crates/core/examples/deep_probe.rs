use eqposet::catalog;
use eqposet::fields::Tower;
use eqposet::tits::DimVector;
use eqposet::verify;

fn main() {
    let t = Tower::gf2();
    let k6 = catalog::catalog_poset("K6").unwrap();
    let start = std::time::Instant::now();
    let rep = verify::verify_theorem_d(&t, &k6, &DimVector::new(3, vec![3, 3]), 10_000_000)
        .unwrap();
    println!("K6 deep box: {} ({:?})", rep.summary(), start.elapsed());
    for row in &rep.rows {
        if row.status != verify::RowStatus::Pass {
            println!("  {} expected {} got {} [{}]", row.case_id, row.expected,
                     row.computed, row.status.as_str());
        }
    }
}
