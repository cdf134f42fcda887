#![no_main]

use edge_outer::gadgets::NodeName;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(name) = text.parse::<NodeName>() {
        assert_eq!(name.to_string().parse::<NodeName>(), Ok(name));
    }
});
