#![no_main]

use edge_outer::format::{parse_graph, serialize_graph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(file) = parse_graph(text) else {
        return;
    };
    let out = serialize_graph(&file.graph, file.embedding.as_ref(), file.names.as_deref());
    let again = parse_graph(&out).expect("serialized graph must parse");
    let twice = serialize_graph(&again.graph, again.embedding.as_ref(), again.names.as_deref());
    assert_eq!(out, twice);
    if let Some(emb) = &file.embedding {
        let _ = emb.genus();
    }
});
