#![no_main]

use libfuzzer_sys::fuzz_target;
use tgb::threaded::Lineage;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(lineage) = text.parse::<Lineage>() {
        let back: Lineage = lineage.to_string().parse().unwrap();
        assert_eq!(back, lineage);
    }
});
