#![no_main]

use hyperchrome::constructions::{split, SplitSpec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(spec) = serde_json::from_slice::<SplitSpec>(data) else { return };
    if let Ok(result) = split(&spec) {
        assert_eq!(result.graph.vertex_count(), spec.g1.vertex_count() + spec.g2.vertex_count() - 1);
        assert_eq!(result.first_side().len(), spec.g1.vertex_count());
    }
});
