/*
 * C interface to the neutro library.
 *
 * All objects are opaque handles created by a *_create / *_parse / *_load /
 * *_run function and released by the matching *_free function (NULL is
 * accepted). Functions that can fail return neutro_status; on failure
 * neutro_last_error() holds a message for the calling thread and
 * neutro_last_error_offset() the character offset into parsed text, or -1.
 *
 * Strings returned through `char**` are heap copies released with
 * neutro_string_free. `const char*` fields of the record structs are owned by
 * the handle they came from and stay valid until it is freed.
 */
#ifndef NEUTRO_NEUTRO_H
#define NEUTRO_NEUTRO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NEUTRO_BUILDING)
#    define NEUTRO_API __declspec(dllexport)
#  else
#    define NEUTRO_API __declspec(dllimport)
#  endif
#else
#  define NEUTRO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum neutro_status {
  NEUTRO_OK = 0,
  NEUTRO_ERR_SYNTAX = 1,
  NEUTRO_ERR_OUT_OF_RANGE = 2,
  NEUTRO_ERR_EMPTY_INPUT = 3,
  NEUTRO_ERR_EMPTY_SUBSET = 4,
  NEUTRO_ERR_INVALID_INTERVAL = 5,
  NEUTRO_ERR_COMPONENT = 6,
  NEUTRO_ERR_UNKNOWN_ELEMENT = 7,
  NEUTRO_ERR_INVALID_LABEL = 8,
  NEUTRO_ERR_DUPLICATE_ID = 9,
  NEUTRO_ERR_IO = 10,
  NEUTRO_ERR_INVALID_ARGUMENT = 11,
  NEUTRO_ERR_INTERNAL = 99
} neutro_status;

typedef enum neutro_kind {
  NEUTRO_KIND_ELEMENT = 0,
  NEUTRO_KIND_EVENT = 1,
  NEUTRO_KIND_PROPOSITION = 2
} neutro_kind;

/* Label bits; a label set is their bitwise OR. */
#define NEUTRO_LABEL_NEUTROSOPHIC     (1u << 0)
#define NEUTRO_LABEL_CLASSICAL        (1u << 1)
#define NEUTRO_LABEL_FUZZY            (1u << 2)
#define NEUTRO_LABEL_INTUITIONISTIC   (1u << 3)
#define NEUTRO_LABEL_PARACONSISTENT   (1u << 4)
#define NEUTRO_LABEL_FAILLIBILIST     (1u << 5)
#define NEUTRO_LABEL_PARADOXIST       (1u << 6)
#define NEUTRO_LABEL_PSEUDOPARADOXIST (1u << 7)
#define NEUTRO_LABEL_TAUTOLOGICAL     (1u << 8)
#define NEUTRO_LABEL_NIHILIST         (1u << 9)
#define NEUTRO_LABEL_COUNT 10

typedef struct neutro_triple neutro_triple;
typedef struct neutro_set_model neutro_set_model;
typedef struct neutro_space neutro_space;
typedef struct neutro_corpus neutro_corpus;
typedef struct neutro_lattice neutro_lattice;

NEUTRO_API const char* neutro_last_error(void);
NEUTRO_API long neutro_last_error_offset(void);
NEUTRO_API const char* neutro_status_name(neutro_status status);
NEUTRO_API void neutro_string_free(char* s);

/* Labels and kinds. label_bit must be a single NEUTRO_LABEL_* bit. */
NEUTRO_API const char* neutro_label_name(uint32_t label_bit);
NEUTRO_API neutro_status neutro_label_from_name(const char* name,
                                                uint32_t* out_bit);
/* "paradoxist set" / "paradoxist probability" / "paradoxist logic". */
NEUTRO_API neutro_status neutro_label_display_name(uint32_t label_bit,
                                                   neutro_kind kind,
                                                   char** out);
NEUTRO_API const char* neutro_kind_name(neutro_kind kind);
NEUTRO_API neutro_status neutro_kind_from_name(const char* name,
                                               neutro_kind* out);

/* Parses one endpoint literal ("1+", "0-", "2/5") and returns its
 * canonical spelling. */
NEUTRO_API neutro_status neutro_endpoint_canonical(const char* literal,
                                                   char** out);

/* Triples. */
NEUTRO_API neutro_status neutro_triple_parse(const char* literal,
                                             neutro_triple** out);
NEUTRO_API void neutro_triple_free(neutro_triple* t);
NEUTRO_API neutro_status neutro_triple_format(const neutro_triple* t,
                                              char** out);
NEUTRO_API neutro_status neutro_triple_labels(const neutro_triple* t,
                                              uint32_t* out_labels);
NEUTRO_API neutro_status neutro_triple_n_inf(const neutro_triple* t,
                                             char** out);
NEUTRO_API neutro_status neutro_triple_n_sup(const neutro_triple* t,
                                             char** out);
NEUTRO_API neutro_status neutro_triple_equal(const neutro_triple* a,
                                             const neutro_triple* b,
                                             int* out_equal);

/* Set models: element id -> triple. */
NEUTRO_API neutro_status neutro_set_model_create(neutro_set_model** out);
NEUTRO_API void neutro_set_model_free(neutro_set_model* m);
NEUTRO_API neutro_status neutro_set_model_add(neutro_set_model* m,
                                              const char* id,
                                              const neutro_triple* t);
NEUTRO_API neutro_status neutro_set_model_belongs(const neutro_set_model* m,
                                                  const char* id,
                                                  int* in_set,
                                                  int* in_complement);
NEUTRO_API neutro_status neutro_set_model_is_dialetheist(
    const neutro_set_model* m, int* out);
NEUTRO_API neutro_status neutro_set_model_is_trivialist(
    const neutro_set_model* m, int* out);
/* label_name is a per-triple label name such as "Nihilist". */
NEUTRO_API neutro_status neutro_set_model_lift(const neutro_set_model* m,
                                               const char* label_name,
                                               int* out);

/* Complement spaces: event id -> (event, co_event). */
NEUTRO_API neutro_status neutro_space_create(neutro_space** out);
NEUTRO_API void neutro_space_free(neutro_space* s);
NEUTRO_API neutro_status neutro_space_add(neutro_space* s, const char* id,
                                          const neutro_triple* event,
                                          const neutro_triple* co_event);
NEUTRO_API neutro_status neutro_space_is_dialetheist(const neutro_space* s,
                                                     int* out);
NEUTRO_API neutro_status neutro_space_is_trivialist(const neutro_space* s,
                                                    int* out);

/* Corpora: files of triple literals or JSON record arrays. */
typedef struct neutro_record {
  const char* id;
  neutro_kind kind;
  uint32_t labels;
  const char* triple; /* canonical literal */
  const char* n_inf;
  const char* n_sup;
} neutro_record;

typedef struct neutro_record_error {
  size_t line; /* 1-based line, or record index for JSON corpora */
  const char* id;
  const char* message;
} neutro_record_error;

/* Record-level failures do not fail the load; inspect
 * neutro_corpus_error_count. */
NEUTRO_API neutro_status neutro_corpus_load(const char* path,
                                            neutro_kind default_kind,
                                            neutro_corpus** out);
NEUTRO_API neutro_status neutro_corpus_parse(const char* content,
                                             neutro_kind default_kind,
                                             neutro_corpus** out);
NEUTRO_API void neutro_corpus_free(neutro_corpus* c);
NEUTRO_API int neutro_corpus_is_json(const neutro_corpus* c);
NEUTRO_API size_t neutro_corpus_record_count(const neutro_corpus* c);
NEUTRO_API neutro_status neutro_corpus_record(const neutro_corpus* c,
                                              size_t index,
                                              neutro_record* out);
NEUTRO_API size_t neutro_corpus_error_count(const neutro_corpus* c);
NEUTRO_API neutro_status neutro_corpus_error(const neutro_corpus* c,
                                             size_t index,
                                             neutro_record_error* out);
/* Runs the invariant checks; violations are then read with
 * neutro_corpus_violation. */
NEUTRO_API neutro_status neutro_corpus_validate(neutro_corpus* c,
                                                size_t* out_count);
NEUTRO_API neutro_status neutro_corpus_violation(const neutro_corpus* c,
                                                 size_t index,
                                                 neutro_record_error* out);
/* check: "dialetheist", "trivialist" or "lift:<Label>". */
NEUTRO_API neutro_status neutro_corpus_check(const neutro_corpus* c,
                                             const char* check, int* out);

/* Implication / co-occurrence table over a grid of singleton triples.
 * NULL lists select the default grid {0,1/4,1/2,3/4,1} x {-1,0,1}. */
typedef struct neutro_lattice_cell {
  size_t antecedent_count;
  size_t counterexamples;
  int co_witnessed;
  const char* counterexample; /* NULL when none */
  const char* witness;        /* NULL when none */
} neutro_lattice_cell;

NEUTRO_API neutro_status neutro_lattice_run(const char* std_list,
                                            const char* eps_list,
                                            neutro_lattice** out);
NEUTRO_API void neutro_lattice_free(neutro_lattice* l);
NEUTRO_API size_t neutro_lattice_triple_count(const neutro_lattice* l);
NEUTRO_API size_t neutro_lattice_endpoint_count(const neutro_lattice* l);
NEUTRO_API const char* neutro_lattice_endpoint(const neutro_lattice* l,
                                               size_t index);
NEUTRO_API size_t neutro_lattice_label_count(const neutro_lattice* l,
                                             uint32_t label_bit);
NEUTRO_API neutro_status neutro_lattice_cell_get(const neutro_lattice* l,
                                                 uint32_t antecedent_bit,
                                                 uint32_t consequent_bit,
                                                 neutro_lattice_cell* out);

#ifdef __cplusplus
}
#endif

#endif /* NEUTRO_NEUTRO_H */
