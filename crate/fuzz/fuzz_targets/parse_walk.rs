#![no_main]

use edge_outer::format::{parse_walk_darts, serialize_walk};
use edge_outer::{Graph, Walk};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(darts) = parse_walk_darts(text) else {
        return;
    };
    // Check against a bouquet large enough to hold every dart.
    let m = darts.iter().map(|d| d.edge() + 1).max().unwrap_or(0);
    if m > 1 << 12 {
        return;
    }
    let g = Graph::new(1, vec![(0, 0); m]).unwrap();
    if let Ok(w) = Walk::new(&g, darts.clone()) {
        assert_eq!(parse_walk_darts(&serialize_walk(&w)).unwrap(), darts);
    }
});
