export abstract class BasePageComponent {
  abstract pageTitle: string;
  initPage() {
    console.log(`Initializing page: ${this.pageTitle}`);
  }
}

@Component({
  selector: 'app-home',
  templateUrl: './home.component.html'
})
export class HomeComponent extends BasePageComponent {
  pageTitle = 'Home Page';
}
