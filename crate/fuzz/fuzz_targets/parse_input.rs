#![no_main]

use libfuzzer_sys::fuzz_target;
use tgb::cli::{parse_input, parse_poly_expr, render_poly};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = parse_input(text) {
        for g in &spec.generators {
            let rendered = render_poly(g, &spec.ring);
            let back = parse_poly_expr(&rendered, &spec.ring).expect("rendered polynomial reparses");
            assert_eq!(&back, g);
        }
    }
});
