// Copyright 2026 The mhtlp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MHTLP_MHTLP_H_
#define MHTLP_MHTLP_H_

/*
 * C interface to the mhtlp library.
 *
 * Field contexts and random sources are opaque handles. Every other artifact
 * (keys, chains, grants, puzzles, bundles, leader configurations) crosses the
 * boundary as a canonical JSON string. Strings returned through `char**`
 * outputs are owned by the caller and must be released with
 * mhtlp_string_free. On any status other than MHTLP_OK the outputs are left
 * untouched and mhtlp_last_error() describes the failure for the calling
 * thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(MHTLP_BUILDING_LIBRARY)
#define MHTLP_API __attribute__((visibility("default")))
#else
#define MHTLP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mhtlp_status {
  MHTLP_OK = 0,
  MHTLP_REJECT = 1,           /* a verifier rejected */
  MHTLP_MALFORMED = 2,        /* artifact has the wrong shape */
  MHTLP_INTERNAL = 3,
  MHTLP_INVALID_ARGUMENT = 4, /* caller precondition violated */
  MHTLP_INTEGRITY = 5,        /* no committed root matched while solving */
  MHTLP_MISBEHAVIOR = 6,      /* OLE+ detected a deviation; protocol halted */
  MHTLP_DEGENERATE = 7,       /* combination polynomial identically zero */
  MHTLP_CANCELLED = 8
} mhtlp_status;

typedef struct mhtlp_rng mhtlp_rng;
typedef struct mhtlp_field mhtlp_field;

MHTLP_API const char* mhtlp_version(void);
MHTLP_API const char* mhtlp_status_name(mhtlp_status status);
/* Message of the most recent failure on this thread; never NULL. */
MHTLP_API const char* mhtlp_last_error(void);
MHTLP_API void mhtlp_string_free(char* s);

MHTLP_API mhtlp_status mhtlp_rng_new_seeded(uint64_t seed, mhtlp_rng** out);
MHTLP_API mhtlp_status mhtlp_rng_new_system(mhtlp_rng** out);
MHTLP_API void mhtlp_rng_free(mhtlp_rng* rng);

/* allow_small_prime != 0 permits primes below 128 bits (tests only). */
MHTLP_API mhtlp_status mhtlp_field_generate(unsigned prime_bits, unsigned tbar,
                                            int allow_small_prime, mhtlp_rng* rng,
                                            mhtlp_field** out);
/* p is lowercase hex; seed is byte hex (may be empty). */
MHTLP_API mhtlp_status mhtlp_field_new(const char* p_hex, unsigned tbar, const char* seed_hex,
                                       int allow_small_prime, mhtlp_field** out);
MHTLP_API mhtlp_status mhtlp_field_from_json(const char* json, mhtlp_field** out);
MHTLP_API mhtlp_status mhtlp_field_to_json(const mhtlp_field* field, char** out);
MHTLP_API mhtlp_status mhtlp_field_with_tbar(const mhtlp_field* field, unsigned tbar,
                                             mhtlp_field** out);
MHTLP_API void mhtlp_field_free(mhtlp_field* field);

/* Keypair JSON: {"n","phi","primes"}; bits is the size of each prime. */
MHTLP_API mhtlp_status mhtlp_keygen(unsigned prime_bits, mhtlp_rng* rng, char** keypair_json);

/* messages_json: array of hex strings. schedule_json: {"intervals":[..],"maxss":k}. */
MHTLP_API mhtlp_status mhtlp_puzzle_gen(const mhtlp_field* field, const char* keypair_json,
                                        const char* messages_json, const char* schedule_json,
                                        mhtlp_rng* rng, char** chain_json,
                                        char** master_keys_json);

/* eval_json: {"puzzle": {"g": [..]}, "grant": {...}}. secrets_json may be NULL. */
MHTLP_API mhtlp_status mhtlp_evaluate_sc(const mhtlp_field* field, const char* chain_json,
                                         const char* master_keys_json, const char* keypair_json,
                                         const char* coefficients_json, uint64_t delay,
                                         mhtlp_rng* rng, char** eval_json, char** secrets_json);

MHTLP_API mhtlp_status mhtlp_select_leaders(size_t n, size_t tddot, size_t threshold,
                                            const char* rhat_hex, char** config_json);

/* clients_json: array of {"chain","master_keys","keypair","puzzle_id","coefficient"}.
 * eval_json: {"puzzle": {...}, "grants": {"<leader>": {...}, ...}}. */
MHTLP_API mhtlp_status mhtlp_evaluate_mc(const mhtlp_field* field, const char* clients_json,
                                         const char* config_json, uint64_t delay,
                                         uint64_t maxss, mhtlp_rng* rng, char** eval_json);

MHTLP_API mhtlp_status mhtlp_solve_chain(const mhtlp_field* field, const char* chain_json,
                                         char** bundle_json);
MHTLP_API mhtlp_status mhtlp_solve_eval_sc(const mhtlp_field* field, const char* puzzle_json,
                                           const char* grant_json, char** bundle_json);
MHTLP_API mhtlp_status mhtlp_solve_eval_mc(const mhtlp_field* field, const char* puzzle_json,
                                           const char* grants_json, const char* config_json,
                                           char** bundle_json);

/* MHTLP_OK accepts, MHTLP_REJECT rejects. */
MHTLP_API mhtlp_status mhtlp_verify_client(const char* bundle_json, const char* chain_json);
MHTLP_API mhtlp_status mhtlp_verify_eval_sc(const mhtlp_field* field, const char* bundle_json,
                                            const char* puzzle_json, const char* grant_json);
MHTLP_API mhtlp_status mhtlp_verify_eval_mc(const mhtlp_field* field, const char* bundle_json,
                                            const char* puzzle_json, const char* grants_json,
                                            const char* config_json);

/* report_json: {"squarings_per_second","modulus_bits","squarings","seconds"}. */
MHTLP_API mhtlp_status mhtlp_bench_squaring(unsigned prime_bits, double seconds,
                                            mhtlp_rng* rng, char** report_json);

/* MHTLP_OK when every check passes, MHTLP_REJECT otherwise; the transcript
 * is produced in both cases. */
MHTLP_API mhtlp_status mhtlp_run_scenario(const char* scenario_json, char** transcript_json);

#ifdef __cplusplus
}
#endif

#endif /* MHTLP_MHTLP_H_ */
