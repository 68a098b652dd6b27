#![no_main]

use hyperchrome::hgr;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = hgr::parse(text) {
        let written = hgr::to_string(&g);
        assert_eq!(hgr::parse(&written).expect("written HGR parses"), g);
    }
});
