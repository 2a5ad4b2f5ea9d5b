export abstract class BaseTicketPageComponent {
  pageTitle = '';
  initPage() {
    console.log(`Initializing page: ${this.pageTitle}`);
  }
}
