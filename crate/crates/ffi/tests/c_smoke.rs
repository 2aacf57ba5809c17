//! Compiles and runs a small C program against the generated header and
//! the static library, exercising the ABI the way a foreign consumer
//! would.

use std::path::PathBuf;
use std::process::Command;

const C_SOURCE: &str = r#"
#include <stdio.h>
#include <string.h>
#include "coremp.h"

int main(void) {
    CorempDatumSet *set = NULL;
    if (coremp_datum_set_parse("3:0,1;9:0,5", &set) != COREMP_STATUS_OK) return 1;

    struct CorempVerdict verdict;
    if (coremp_decide_finite(set, &verdict) != COREMP_STATUS_OK) return 2;
    if (!verdict.finite || verdict.g_value != 1) return 3;

    char *json = NULL;
    if (coremp_enumerate_json(set, 1, 12, &json) != COREMP_STATUS_OK) return 4;
    if (strstr(json, "\"count\":12") == NULL) return 5;
    coremp_string_free(json);
    coremp_datum_set_free(set);

    char *decoded = NULL;
    if (coremp_codec_decode("st", "DRDRDRRR", 3, 5, 0, &decoded) != COREMP_STATUS_OK) return 6;
    if (strcmp(decoded, "[1]") != 0) return 7;
    coremp_string_free(decoded);

    CorempDatumSet *infinite = NULL;
    if (coremp_datum_set_parse("3:0,1", &infinite) != COREMP_STATUS_OK) return 8;
    char *unused = NULL;
    if (coremp_enumerate_json(infinite, 1, 12, &unused) != COREMP_STATUS_INFINITE_SET) return 9;
    coremp_datum_set_free(infinite);

    printf("ok\n");
    return 0;
}
"#;

#[test]
fn c_consumer_compiles_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include_dir = manifest.join("include");
    let static_lib = manifest.join("../../target/debug/libcoremp_ffi.a");
    assert!(
        static_lib.exists(),
        "static library missing at {static_lib:?}; build the workspace first"
    );
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler on PATH");
        return;
    }

    let work = std::env::temp_dir().join(format!("coremp-ffi-smoke-{}", std::process::id()));
    std::fs::create_dir_all(&work).unwrap();
    let source = work.join("smoke.c");
    let binary = work.join("smoke");
    std::fs::write(&source, C_SOURCE).unwrap();

    let compile = Command::new("cc")
        .arg(&source)
        .arg("-o")
        .arg(&binary)
        .arg("-I")
        .arg(&include_dir)
        .arg(&static_lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .output()
        .expect("cc runs");
    assert!(
        compile.status.success(),
        "compile failed: {}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&binary).output().expect("smoke binary runs");
    assert!(
        run.status.success(),
        "smoke exited with {:?}: {}",
        run.status.code(),
        String::from_utf8_lossy(&run.stdout)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");

    let _ = std::fs::remove_dir_all(&work);
}
