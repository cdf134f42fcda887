#![no_main]

//! Input: a graph file and a walk file separated by a line `%%`.

use edge_outer::format::{parse_graph, parse_walk};
use edge_outer::optimal::is_cprs_walk;
use edge_outer::{realize_as_face, validate_walk};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Some((graph, walk)) = text.split_once("\n%%\n") else {
        return;
    };
    let Ok(file) = parse_graph(graph) else {
        return;
    };
    if file.graph.edge_count() > 256 {
        return;
    }
    let Ok(w) = parse_walk(walk, &file.graph) else {
        return;
    };
    let report = validate_walk(&file.graph, &w);
    let _ = is_cprs_walk(&file.graph, &w);
    if report.orientable && report.rotation_compatible {
        let emb = realize_as_face(&file.graph, &w).expect("compatible walk must realize");
        assert!(emb
            .trace_faces()
            .faces()
            .iter()
            .any(|f| edge_outer::Walk::new(&file.graph, f.clone()).unwrap().same_cycle(&w)));
    }
});
