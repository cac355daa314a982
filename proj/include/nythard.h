#ifndef NYTHARD_H
#define NYTHARD_H

/* C interface to the nythard toolkit: solvers and verifiers for four puzzle
 * games (letterboxed, pips, strands, tiles) and the hardness constructions
 * between them and their source problems. All payloads are JSON documents
 * passed as NUL-terminated UTF-8 strings; strings returned through out
 * parameters are owned by the caller and released with nythard_string_free.
 */

#ifdef __cplusplus
extern "C" {
#endif

/* Shared return codes. */
#define NYTHARD_OK 0     /* solvable / valid / pass */
#define NYTHARD_NO 1     /* unsolvable / invalid / fail */
#define NYTHARD_ERROR 2  /* malformed input, unknown subject, internal error */
#define NYTHARD_BUDGET 3 /* search budget exhausted before an answer */

typedef struct nythard_ctx nythard_ctx;

nythard_ctx* nythard_ctx_new(void);
void nythard_ctx_free(nythard_ctx* ctx);

/* Message for the most recent NYTHARD_ERROR on this context ("" if none).
 * Valid until the next call on the same context. */
const char* nythard_last_error(const nythard_ctx* ctx);

void nythard_string_free(char* s);

const char* nythard_version(void);

/* Options document (any call accepting options_json also accepts NULL):
 *   {"k": int, "noDiagonal": bool, "connected": bool,
 *    "budget": int, "seed": int}
 * Unknown keys are rejected; every key is optional.
 *
 * game:    "letterboxed" | "pips" | "strands" | "tiles"
 * subject: "nae3sat-to-letterboxed" | "3dm-to-letterboxed" |
 *          "lift-letterboxed" | "1in3-to-pips" | "subsetsum-to-pips" |
 *          "1in3-to-strands" | "flowfree-to-strands" | "expand-strands"
 * gen kinds: the four games plus "nae3sat" | "1in3" | "3dm" | "subsetsum" |
 *          "flowfree"
 */

/* Solves an instance. OK: *witness_json receives the witness document.
 * NO: proven unsolvable (letterboxed: within k, defaulting to the
 * certificate bound). BUDGET: undecided. */
int nythard_solve(nythard_ctx* ctx, const char* game, const char* instance_json,
                  const char* options_json, char** witness_json);

/* Checks a witness. OK / NO; *report_json (optional) receives
 * {"valid": bool, "errors": [string...]}. */
int nythard_verify(nythard_ctx* ctx, const char* game, const char* instance_json,
                   const char* witness_json, const char* options_json, char** report_json);

/* Builds the reduced puzzle for a subject. *bundle_json receives
 * {"puzzle": <instance>, "sidecar": <layout or null>}. lift-letterboxed
 * requires options "k" and takes a letterboxed puzzle as its source. */
int nythard_reduce(nythard_ctx* ctx, const char* subject, const char* source_json,
                   const char* options_json, char** bundle_json);

/* Maps a verified puzzle witness back to a source witness. bundle_json is
 * the reduce output (or an equivalent {"puzzle":..., "sidecar":...}). */
int nythard_pullback(nythard_ctx* ctx, const char* subject, const char* source_json,
                     const char* bundle_json, const char* witness_json, const char* options_json,
                     char** source_witness_json);

/* reduce -> solve -> pullback -> source-verify -> compare with an
 * independent source oracle. OK on pass, NO on any mismatch; *report_json
 * documents each stage. */
int nythard_roundtrip(nythard_ctx* ctx, const char* subject, const char* source_json,
                      const char* options_json, char** report_json);

/* Seeded small instance of the named kind. */
int nythard_generate(nythard_ctx* ctx, const char* kind, const char* options_json,
                     char** instance_json);

/* ASCII art for any game; *svg_out (may be NULL) additionally receives SVG
 * for pips and strands and is set to NULL for the other games.
 * witness_json may be NULL to render the bare instance. */
int nythard_render(nythard_ctx* ctx, const char* game, const char* instance_json,
                   const char* witness_json, const char* options_json, char** ascii_out,
                   char** svg_out);

/* Parses any JSON document and re-emits it in canonical form (sorted keys,
 * two-space indent, trailing newline). */
int nythard_canonicalize(nythard_ctx* ctx, const char* text, char** canonical_json);

#ifdef __cplusplus
}
#endif

#endif /* NYTHARD_H */
