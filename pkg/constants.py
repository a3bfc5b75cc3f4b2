import os
from pathlib import Path

#third party
from dotenv import load_dotenv

PROJECT_PATH = Path(os.path.dirname(os.path.realpath(__file__)))
load_dotenv(PROJECT_PATH / '.env')

DEBUG = os.getenv('TURAN_DEBUG', '').lower() in ('1', 'true', 'yes') #show debug messages in CLI

HEADER = '\033[95m'
OKCYAN = '\033[96m'
OKGREEN = '\033[92m'
WARNING = '\033[93m'
FAIL = '\033[91m'
ENDC = '\033[0m'
UNDERLINE = '\033[4m'
NOUNDERLINE = '\033[0m'

LOGGING_FORMAT = ('%(asctime)s:%(process)d - %(name)s - %(levelname)s - %(message)s')

#################### LIMITS ####################

MAX_VERTICES = 62                   #header-less graph6 limit
DEFAULT_BUDGET = float(os.getenv('TURAN_BUDGET', 60))          #seconds per search call
ORACLE_EDGE_CAP = int(os.getenv('TURAN_ORACLE_CAP', 20))       #a*b edge bits, 2**20 candidates
DEFAULT_WORKERS = int(os.getenv('TURAN_WORKERS', 1))
BUDGET_CHECK_INTERVAL = 4096        #search nodes between clock reads

#################### SAMPLING ####################

DEFAULT_SEED = int(os.getenv('TURAN_SEED', 20251019))
PROPERTY_SAMPLES = int(os.getenv('TURAN_SAMPLES', 1000))
SLOW_TESTS = os.getenv('TURAN_SLOW_TESTS', '').lower() in ('1', 'true', 'yes')

#################### EXIT CODES ####################

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RANGE = 3
EXIT_GAP = 4
EXIT_BUDGET = 5
EXIT_CAP = 6

#################### FORMATS ####################

JSON = 'json'
CSV = 'csv'
GRAPH6 = 'graph6'
DOT = 'dot'
OUTPUT_FORMATS = (JSON, CSV, GRAPH6, DOT)

PATH_TOKEN = 'P'
LONG_CYCLE_TOKEN = 'Cge'

#################### JSON KEYS ####################

A_SIZE = 'a_size'
B_SIZE = 'b_size'
EDGES = 'edges'
PARAMS = 'params'
VALUE = 'value'
THEOREM = 'theorem'
BRANCH = 'branch'
MAX_EDGES = 'max_edges'
EXTREMAL_GRAPHS = 'extremal_graphs'
GRAPHS_SCANNED = 'graphs_scanned'
ELAPSED = 'elapsed'

STATEMENT_GAP = 'statement gap (a = 2ℓ−1)'

#################### MESSAGES ####################

get_color = lambda x: OKGREEN if x else FAIL
get_word = lambda x: '' if x else 'not '

def oracle_start_message(params):
    return f'{HEADER}Starting oracle for {UNDERLINE}{params.token}{NOUNDERLINE} {HEADER}on K_{{{params.a},{params.b}}} ({params.connectivity.value}){ENDC}'

def oracle_done_message(result):
    return f'{OKCYAN}Oracle finished: max {result.max_edges} edges, {result.class_count} extremal classes, {result.graphs_scanned} graphs scanned in {result.elapsed:.2f}s{ENDC}'

def match_message(row):
    x = row['match']
    return f"{get_color(x)}{row['theorem']}{ENDC} at (a={row['a']}, b={row['b']}, n={row['length']}) does {get_word(x)}match the oracle"