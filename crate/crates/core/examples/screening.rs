//! Lazily screens a batch of candidate arrays and prints each verdict.

use drg_resistance::arrays::parse_array;
use drg_resistance::bounds::screen;

fn main() {
    let candidates = [
        "3,2;1,1",
        "3,2,2,1,1,1,1;1,1,1,1,1,1,3",
        "5,4;1,3",
        "3,3;1,1",
        "7,6,4,4,4,1,1,1;1,1,1,2,4,4,6,7",
        "10,6,4,1;1,2,6,10",
        "bogus",
    ];
    for result in screen(candidates.iter().map(|s| parse_array(s))) {
        let label = result
            .array
            .as_ref()
            .map_or_else(|| "<malformed>".to_string(), ToString::to_string);
        println!("{label:<40} {}", result.verdict);
    }
}
