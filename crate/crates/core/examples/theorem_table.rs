//! The closed-form count for every k over a short range of n, as CSV.

use spherefib::cli::{table_rows, NRange};

fn main() -> spherefib::Result<()> {
    let mut w = csv::Writer::from_writer(std::io::stdout());
    for k in 2..=6 {
        for row in table_rows(k, NRange { lo: 2, hi: 32 })? {
            w.serialize(row).expect("csv");
        }
    }
    w.flush().expect("flush");
    Ok(())
}
