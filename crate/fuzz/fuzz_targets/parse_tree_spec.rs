#![no_main]

use hyperchrome::constructions::{c2_tree, TreeSpec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(spec) = serde_json::from_slice::<TreeSpec>(data) else { return };
    if let Ok(g) = c2_tree(&spec) {
        assert_eq!(g.vertex_count(), spec.parent.len());
        assert_eq!(g.edge_count(), spec.parent.len());
    }
});
