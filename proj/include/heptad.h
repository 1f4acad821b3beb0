/* C interface to the heptad engine: the finite geometry of the three-qubit
 * Pauli group, its 135 commuting heptads and their four-qubit labels, magic
 * pentagram enumeration, and the generalized hexagon carved out by an
 * antisymmetric axis.
 *
 * All functions returning a report hand back a heap-allocated JSON document
 * through an out-parameter; release it with heptad_string_free(). Reports
 * always carry the keys command, status, metrics, artifacts and version;
 * data is present when the command produced a payload. A status of "fail"
 * still returns HEPTAD_OK: the call succeeded, the verification did not.
 * Use heptad_report_failed() to test for that.
 */

#ifndef HEPTAD_H
#define HEPTAD_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct heptad_engine heptad_engine;

typedef enum heptad_status {
  HEPTAD_OK = 0,
  HEPTAD_ERR_ARGUMENT = 1, /* unparseable label, unknown suite or kind */
  HEPTAD_ERR_NOMEM = 2,
  HEPTAD_ERR_INTERNAL = 3
} heptad_status;

/* Engines are cheap to create; expensive tables are built lazily on first
 * use and cached for the engine's lifetime. Not thread-safe; use one engine
 * per thread. Returns NULL on allocation failure. */
heptad_engine *heptad_engine_create(void);
void heptad_engine_destroy(heptad_engine *eng);

/* Worker threads for the pentagram search (>= 1). */
heptad_status heptad_engine_set_threads(heptad_engine *eng, int threads);

/* Message for the most recent failing call on this engine; empty string if
 * none. Owned by the engine, valid until the next call on it. */
const char *heptad_engine_last_error(const heptad_engine *eng);

/* suite: all, group, bijection, pentagrams, hexagon, spreads. */
heptad_status heptad_verify(heptad_engine *eng, const char *suite, char **report_json);

/* what: planes, lines, edges, pentagrams, spreads. format: json, csv.
 * symmetric_only restricts planes to the 30 all-symmetric ones and
 * pentagrams to the 336 all-symmetric ones. The exported rows land in
 * *payload (JSON array or CSV text); JSON reports embed them as data too.
 * artifact_name, when non-NULL, is recorded in the report's artifact list;
 * writing the payload there is the caller's job. payload may be NULL if
 * only the report is wanted. */
heptad_status heptad_enumerate(heptad_engine *eng, const char *what, const char *format,
                               int symmetric_only, const char *artifact_name, char **payload,
                               char **report_json);

/* labels: comma-separated commuting three-qubit operators (3 to 7) spanning
 * a heptad. The report's data holds the full heptad, its index-set labels,
 * its four-qubit image and its class. */
heptad_status heptad_map_plane(heptad_engine *eng, const char *labels, char **report_json);

/* label: a symmetric four-qubit operator; data holds its heptad. */
heptad_status heptad_map_fourqubit(heptad_engine *eng, const char *label, char **report_json);

/* export_payload 0: axiom check, status pass/fail. Nonzero: additionally
 * emit the full point/line model through *payload (and data), status info.
 * artifact_name as in heptad_enumerate. */
heptad_status heptad_hexagon(heptad_engine *eng, int export_payload, const char *artifact_name,
                             char **payload, char **report_json);

/* generators: comma-separated names from dalpha, dbeta, dgamma (6x6) and
 * ralpha, rbeta, rgamma (8x8). Reports the order of the generated group. */
heptad_status heptad_group_order(heptad_engine *eng, const char *generators, char **report_json);

/* seed: one operator label (width picks the representation), or three
 * comma-separated three-qubit labels spanning a plane. */
heptad_status heptad_group_orbit(heptad_engine *eng, const char *seed, char **report_json);

/* 1 when the report's status is "fail", else 0. */
int heptad_report_failed(const char *report_json);

const char *heptad_version(void);
const char *heptad_status_name(heptad_status status);
void heptad_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* HEPTAD_H */
