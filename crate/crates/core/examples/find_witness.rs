fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let start = std::time::Instant::now();
    match voltpath::testkit::find_no_target_tree_witness(max_n) {
        Ok(w) => {
            for line in &w.log {
                println!("{line}");
            }
        }
        Err(e) => println!("{e}"),
    }
    eprintln!("{:?}", start.elapsed());
}
