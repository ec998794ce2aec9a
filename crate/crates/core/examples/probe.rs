use g2osc_core::reps::fundamental::build_fundamental_01;

fn main() {
    let rep = build_fundamental_01().unwrap();
    for (i, rel) in rep.relations.iter().enumerate() {
        println!("weight space {} (rep {}):", i, rel.representative);
        for (m, c) in &rel.expansions {
            println!("    {} = ({}) * rep", m, c);
        }
    }
}
