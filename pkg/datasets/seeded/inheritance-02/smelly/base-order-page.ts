export class BaseOrderPageComponent {
  pageTitle = '';
  initPage() {
    console.log(`Initializing page: ${this.pageTitle}`);
  }
}
